import { phraseRanges } from "./text.js";

// Object mentions take the score-bar colors (hl-a / hl-b); each aspect gets
// its own palette slot so aspect highlighting differs from both objects.

interface Mark {
  start: number;
  end: number;
  cls: string;
}

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function highlightHtml(
  text: string,
  objectA: string,
  objectB: string,
  aspects: string[],
): string {
  const marks: Mark[] = [];
  const claim = (phrase: string, cls: string) => {
    for (const [start, end] of phraseRanges(text, phrase)) {
      if (!marks.some((m) => start < m.end && m.start < end)) {
        marks.push({ start, end, cls });
      }
    }
  };
  claim(objectA, "hl-a");
  claim(objectB, "hl-b");
  aspects.forEach((aspect, i) => claim(aspect, `hl-aspect hl-aspect-${i % 4}`));

  marks.sort((x, y) => x.start - y.start);
  let html = "";
  let cursor = 0;
  for (const mark of marks) {
    html += escapeHtml(text.slice(cursor, mark.start));
    html += `<mark class="${mark.cls}">${escapeHtml(text.slice(mark.start, mark.end))}</mark>`;
    cursor = mark.end;
  }
  html += escapeHtml(text.slice(cursor));
  return html;
}
