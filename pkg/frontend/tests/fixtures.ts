import type {
  ComparisonResult,
  GeneratedAspect,
  ScoredSentence,
  Side,
} from "../src/types.js";

export function makeCard(
  id: number,
  text: string,
  winner: Side,
  s = 5.0,
): ScoredSentence {
  return {
    sentence_id: id,
    document_id: "doc-1",
    position: id,
    text,
    label: winner === "OBJECT_A" ? "BETTER" : "WORSE",
    confidence: 0.9,
    model: "DEFAULT",
    negation_applied: false,
    e: 1.0,
    s,
    winner,
    matched_aspects: [],
  };
}

export function makeAspect(phrase: string, assigned: Side, count = 2): GeneratedAspect {
  return {
    phrase,
    method: "COMP_ADJ",
    count_a: assigned === "OBJECT_A" ? count : 0,
    count_b: assigned === "OBJECT_B" ? count : 0,
    assigned,
  };
}

export function makeResult(overrides: Partial<ComparisonResult> = {}): ComparisonResult {
  const pro_a = [
    makeCard(1, "Python is faster than matlab in most tests.", "OBJECT_A", 9.0),
    makeCard(2, "Python is cheaper than matlab for labs.", "OBJECT_A", 7.0),
    makeCard(3, "Python is cleaner than matlab in large projects.", "OBJECT_A", 5.0),
  ];
  const pro_b = [
    makeCard(4, "Matlab is easier than python for novices.", "OBJECT_B", 6.0),
    makeCard(5, "Matlab is stronger than python at toolboxes.", "OBJECT_B", 4.0),
  ];
  return {
    object_a: "python",
    object_b: "matlab",
    model: "DEFAULT",
    fast_mode: false,
    winner: "OBJECT_A",
    totals: {
      total_a: 21.0,
      total_b: 10.0,
      per_aspect: [{ text: "speed", weight: 3, total_a: 9.0, total_b: 0.0 }],
    },
    score_bar: { a: 21 / 31, b: 10 / 31 },
    pro_a,
    pro_b,
    neutral: [],
    generated_aspects: [
      makeAspect("faster", "OBJECT_A", 3),
      makeAspect("cheaper", "OBJECT_A", 2),
      makeAspect("easier", "OBJECT_B", 2),
    ],
    timings: { total: 0.01 },
    ...overrides,
  };
}

export function manyAspects(count: number): GeneratedAspect[] {
  const aspects: GeneratedAspect[] = [];
  for (let i = 0; i < count; i++) {
    aspects.push(makeAspect(`aspect${String(i).padStart(2, "0")}`,
                            i % 2 === 0 ? "OBJECT_A" : "OBJECT_B"));
  }
  return aspects;
}
