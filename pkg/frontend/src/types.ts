// Wire types for the three service endpoints.

export type Winner = "OBJECT_A" | "OBJECT_B" | "TIE";
export type Side = "OBJECT_A" | "OBJECT_B";
export type Label = "BETTER" | "WORSE" | "EQUAL" | "NONE";
export type Model = "DEFAULT" | "BOW";

export interface WeightedAspect {
  text: string;
  weight: number; // 1..5
}

export interface ComparisonRequest {
  object_a: string;
  object_b: string;
  aspects: WeightedAspect[];
  model: Model;
  fast_mode: boolean;
}

export interface ScoredSentence {
  sentence_id: number;
  document_id: string;
  position: number;
  text: string;
  label: Label;
  confidence: number;
  model: Model;
  negation_applied: boolean;
  e: number;
  s: number;
  winner: Side | "NONE";
  matched_aspects: WeightedAspect[];
}

export interface AspectTotals {
  text: string;
  weight: number;
  total_a: number;
  total_b: number;
}

export interface GeneratedAspect {
  phrase: string;
  method: "COMP_ADJ" | "COMP_PHRASE" | "PATTERN";
  count_a: number;
  count_b: number;
  assigned: Side;
}

export interface ComparisonResult {
  object_a: string;
  object_b: string;
  model: Model;
  fast_mode: boolean;
  winner: Winner;
  totals: { total_a: number; total_b: number; per_aspect: AspectTotals[] };
  score_bar: { a: number; b: number };
  pro_a: ScoredSentence[];
  pro_b: ScoredSentence[];
  neutral: ScoredSentence[];
  generated_aspects: GeneratedAspect[];
  timings?: Record<string, number>;
}

export interface ContextSentence {
  sentence_id: number;
  position: number;
  text: string;
  is_target: boolean;
}

export interface ContextResponse {
  document_id: string;
  target_id: number;
  sentences: ContextSentence[];
}

export interface ErrorDetail {
  field: string;
  message: string;
}

export interface ErrorEnvelope {
  error: { code: string; message: string; details?: unknown };
}
