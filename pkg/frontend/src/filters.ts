import type { GeneratedAspect, ScoredSentence, Side } from "./types.js";
import { containsPhrase, tokenize } from "./text.js";

// Client-side mirror of the service's presentation filter: user aspects
// apply to both columns, generated chips only to their assigned column,
// selections combine disjunctively, and a column with no active phrase
// passes through unfiltered.

export interface ChipSelection {
  user: Set<string>;
  generated: Set<string>;
}

export function emptySelection(): ChipSelection {
  return { user: new Set(), generated: new Set() };
}

export function toggle(set: Set<string>, phrase: string): void {
  if (set.has(phrase)) {
    set.delete(phrase);
  } else {
    set.add(phrase);
  }
}

export function visibleCards(
  cards: ScoredSentence[],
  column: Side,
  selection: ChipSelection,
  generatedAspects: GeneratedAspect[],
): ScoredSentence[] {
  const active: string[] = [...selection.user];
  for (const aspect of generatedAspects) {
    if (selection.generated.has(aspect.phrase) && aspect.assigned === column) {
      active.push(aspect.phrase);
    }
  }
  if (active.length === 0) {
    return cards;
  }
  const needles = active.map((phrase) => tokenize(phrase));
  return cards.filter((card) => {
    const tokens = tokenize(card.text);
    return needles.some((needle) => containsPhrase(tokens, needle));
  });
}
