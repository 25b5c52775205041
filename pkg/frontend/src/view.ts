import type {
  ComparisonResult,
  ContextSentence,
  ScoredSentence,
  Side,
} from "./types.js";
import { fetchContext } from "./api.js";
import { emptySelection, toggle, visibleCards, type ChipSelection } from "./filters.js";
import { escapeHtml, highlightHtml } from "./highlight.js";

const CHIP_LIMIT = 10;

function pct(fraction: number): string {
  return `${(fraction * 100).toFixed(1)}%`;
}

function bar(shareA: number, labelA: string, labelB: string): string {
  const shareB = 1 - shareA;
  return `
    <div class="bar">
      <div class="seg seg-a" style="width:${pct(shareA)}">
        <span>${escapeHtml(labelA)} ${pct(shareA)}</span>
      </div>
      <div class="seg seg-b" style="width:${pct(shareB)}">
        <span>${escapeHtml(labelB)} ${pct(shareB)}</span>
      </div>
    </div>`;
}

function cardHtml(card: ScoredSentence, result: ComparisonResult): string {
  const aspects = result.totals.per_aspect.map((a) => a.text);
  const badge =
    card.label === "EQUAL" ? "=" : card.winner === "OBJECT_A" ? "pro" : "con";
  return `
    <article class="card" data-sentence-id="${card.sentence_id}" data-expanded="false">
      <p class="card-text">${highlightHtml(card.text, result.object_a, result.object_b, aspects)}</p>
      <footer class="card-meta">
        <span class="badge">${badge}</span>
        s=${card.s.toFixed(3)} · ${card.label}${card.negation_applied ? " (negated)" : ""}
        · ${escapeHtml(card.document_id)}
      </footer>
      <div class="card-context" hidden></div>
    </article>`;
}

function contextHtml(sentences: ContextSentence[], full: boolean): string {
  const items = sentences
    .map(
      (s) => `
      <li class="${s.is_target ? "context-target" : ""}" data-position="${s.position}">
        ${escapeHtml(s.text)}
      </li>`,
    )
    .join("");
  const expander = full
    ? ""
    : '<button type="button" class="show-full">Show full document</button>';
  return `<ol class="context-list">${items}</ol>${expander}`;
}

export class AnswerView {
  readonly selection: ChipSelection = emptySelection();

  constructor(
    private readonly root: HTMLElement,
    private readonly result: ComparisonResult,
  ) {
    this.renderSkeleton();
    this.renderColumns();
    this.root.addEventListener("click", (event) => this.onClick(event));
  }

  private renderSkeleton(): void {
    const r = this.result;
    const names: Record<Side | "TIE", string> = {
      OBJECT_A: r.object_a,
      OBJECT_B: r.object_b,
      TIE: "tie",
    };
    const aspectBars = r.totals.per_aspect
      .map((a) => {
        const sum = a.total_a + a.total_b;
        const share = sum > 0 ? a.total_a / sum : 0.5;
        return `<div class="aspect-bar" data-aspect="${escapeHtml(a.text)}">
          <span class="aspect-bar-label">${escapeHtml(a.text)} (w${a.weight})</span>
          ${bar(share, r.object_a, r.object_b)}
        </div>`;
      })
      .join("");
    const chips = r.generated_aspects
      .slice(0, CHIP_LIMIT)
      .map(
        (a) => `
        <button type="button" class="chip side-${a.assigned === "OBJECT_A" ? "a" : "b"}"
                data-phrase="${escapeHtml(a.phrase)}" data-side="${a.assigned}"
                aria-pressed="false">
          ${escapeHtml(a.phrase)} <span class="chip-count">${a.count_a + a.count_b}</span>
        </button>`,
      )
      .join("");
    this.root.innerHTML = `
      <div class="answer">
        <p class="winner-line">Winner: <strong>${escapeHtml(names[r.winner])}</strong></p>
        <div class="overall-bar">${bar(r.score_bar.a, r.object_a, r.object_b)}</div>
        <div class="aspect-bars">${aspectBars}</div>
        ${chips ? `<div class="chips" aria-label="generated aspects">${chips}</div>` : ""}
        <div class="columns">
          <section class="column column-a">
            <h3>Pro ${escapeHtml(r.object_a)}</h3>
            <div class="cards cards-a"></div>
          </section>
          <section class="column column-b">
            <h3>Pro ${escapeHtml(r.object_b)}</h3>
            <div class="cards cards-b"></div>
          </section>
        </div>
        ${
          r.neutral.length
            ? `<details class="neutral"><summary>${r.neutral.length} neutral sentence(s)</summary>
               <div class="cards cards-neutral"></div></details>`
            : ""
        }
      </div>`;
    if (r.neutral.length) {
      (this.root.querySelector(".cards-neutral") as HTMLElement).innerHTML = r.neutral
        .map((card) => cardHtml(card, r))
        .join("");
    }
  }

  renderColumns(): void {
    const columns: Array<[Side, string, ScoredSentence[]]> = [
      ["OBJECT_A", ".cards-a", this.result.pro_a],
      ["OBJECT_B", ".cards-b", this.result.pro_b],
    ];
    for (const [side, selector, cards] of columns) {
      const container = this.root.querySelector(selector) as HTMLElement;
      const shown = visibleCards(cards, side, this.selection, this.result.generated_aspects);
      container.innerHTML = shown.map((card) => cardHtml(card, this.result)).join("");
    }
  }

  private onClick(event: Event): void {
    const target = event.target as HTMLElement;
    const chip = target.closest(".chip") as HTMLElement | null;
    if (chip) {
      this.onChipClick(chip);
      return;
    }
    const showFull = target.closest(".show-full") as HTMLElement | null;
    if (showFull) {
      const card = showFull.closest(".card") as HTMLElement;
      void this.loadContext(card, "FULL");
      return;
    }
    const card = target.closest(".card") as HTMLElement | null;
    if (card) {
      void this.onCardClick(card);
    }
  }

  private onChipClick(chip: HTMLElement): void {
    toggle(this.selection.generated, chip.dataset.phrase ?? "");
    const pressed = this.selection.generated.has(chip.dataset.phrase ?? "");
    chip.setAttribute("aria-pressed", String(pressed));
    chip.classList.toggle("selected", pressed);
    this.renderColumns();
  }

  /** User-entered aspects filter both columns; exposed for main.ts. */
  setUserSelection(phrases: Iterable<string>): void {
    this.selection.user = new Set(phrases);
    this.renderColumns();
  }

  private async onCardClick(card: HTMLElement): Promise<void> {
    const context = card.querySelector(".card-context") as HTMLElement;
    if (card.dataset.expanded === "true") {
      card.dataset.expanded = "false";
      context.hidden = true;
      context.innerHTML = "";
      return;
    }
    await this.loadContext(card, 3);
  }

  private async loadContext(card: HTMLElement, window_: number | "FULL"): Promise<void> {
    const context = card.querySelector(".card-context") as HTMLElement;
    const sentenceId = Number(card.dataset.sentenceId);
    try {
      const response = await fetchContext(sentenceId, window_);
      context.innerHTML = contextHtml(response.sentences, window_ === "FULL");
      context.hidden = false;
      card.dataset.expanded = "true";
    } catch {
      context.innerHTML = '<p class="context-error">Context unavailable.</p>';
      context.hidden = false;
      card.dataset.expanded = "true";
    }
  }
}

export function renderAnswer(root: HTMLElement, result: ComparisonResult): AnswerView {
  return new AnswerView(root, result);
}
