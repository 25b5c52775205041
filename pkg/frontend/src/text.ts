// Tokenization mirroring the service: lowercase word tokens, internal
// apostrophes kept, so "contains phrase" agrees with the backend filters.

const WORD_RE = /[\p{L}\p{N}_]+(?:['’][\p{L}\p{N}_]+)*/gu;

export interface TokenSpan {
  token: string;
  start: number;
  end: number;
}

export function tokenSpans(text: string): TokenSpan[] {
  const spans: TokenSpan[] = [];
  for (const match of text.matchAll(WORD_RE)) {
    spans.push({
      token: match[0].toLowerCase(),
      start: match.index ?? 0,
      end: (match.index ?? 0) + match[0].length,
    });
  }
  return spans;
}

export function tokenize(text: string): string[] {
  return tokenSpans(text).map((s) => s.token);
}

export function containsPhrase(tokens: string[], phrase: string[]): boolean {
  if (phrase.length === 0) return false;
  outer: for (let i = 0; i + phrase.length <= tokens.length; i++) {
    for (let j = 0; j < phrase.length; j++) {
      if (tokens[i + j] !== phrase[j]) continue outer;
    }
    return true;
  }
  return false;
}

/** Character ranges of every contiguous occurrence of `phrase` in `text`. */
export function phraseRanges(text: string, phrase: string): Array<[number, number]> {
  const needle = tokenize(phrase);
  if (needle.length === 0) return [];
  const spans = tokenSpans(text);
  const ranges: Array<[number, number]> = [];
  outer: for (let i = 0; i + needle.length <= spans.length; i++) {
    for (let j = 0; j < needle.length; j++) {
      if (spans[i + j].token !== needle[j]) continue outer;
    }
    ranges.push([spans[i].start, spans[i + needle.length - 1].end]);
  }
  return ranges;
}
