import { afterEach, describe, expect, it } from "vitest";

import { makeResult } from "./fixtures.js";
import { startStub, type StubServer } from "./stub.js";
import { fillObjects, mountApp, submitForm, until } from "./helpers.js";

describe("evidence context expansion", () => {
  let stub: StubServer;

  afterEach(async () => {
    await stub.close();
    document.body.innerHTML = "";
  });

  async function renderAnswer(documentLength = 20) {
    stub = await startStub({ compare: makeResult(), documentLength });
    mountApp(stub);
    fillObjects("python", "matlab");
    submitForm();
    await until(() => document.querySelectorAll(".card").length > 0);
  }

  function firstCard(): HTMLElement {
    return document.querySelector(".cards-a .card") as HTMLElement;
  }

  it("clicking a card shows at most seven context sentences with the target marked", async () => {
    await renderAnswer();
    const card = firstCard(); // sentence_id 1 -> clipped window 0..4
    (card.querySelector(".card-text") as HTMLElement).click();
    await until(() => card.querySelectorAll(".context-list li").length > 0);

    const items = card.querySelectorAll(".context-list li");
    expect(items.length).toBeLessThanOrEqual(7);
    expect(items.length).toBe(5);
    const target = card.querySelectorAll(".context-target");
    expect(target).toHaveLength(1);
    expect(stub.requests.some((r) => r.path === "/api/context/1?window=3")).toBe(true);
  });

  it("show full document re-fetches with window=FULL and renders the whole document", async () => {
    await renderAnswer(20);
    const card = firstCard();
    (card.querySelector(".card-text") as HTMLElement).click();
    await until(() => card.querySelectorAll(".context-list li").length > 0);

    (card.querySelector(".show-full") as HTMLElement).click();
    await until(() => card.querySelectorAll(".context-list li").length === 20);

    expect(stub.requests.some((r) => r.path === "/api/context/1?window=FULL")).toBe(true);
    expect(card.querySelector(".show-full")).toBeNull(); // already showing everything
  });

  it("a second click collapses back to the original card", async () => {
    await renderAnswer();
    const card = firstCard();
    (card.querySelector(".card-text") as HTMLElement).click();
    await until(() => card.querySelectorAll(".context-list li").length > 0);

    (card.querySelector(".card-text") as HTMLElement).click();
    expect(card.querySelectorAll(".context-list li")).toHaveLength(0);
    expect((card.querySelector(".card-context") as HTMLElement).hidden).toBe(true);
  });

  it("a missing context shows a card-level error note", async () => {
    await renderAnswer(2); // document too short: card id 4 is unknown
    const card = document.querySelector(".cards-b .card") as HTMLElement;
    (card.querySelector(".card-text") as HTMLElement).click();
    await until(() => card.querySelector(".context-error") !== null);
    expect(card.querySelector(".context-error")!.textContent).toMatch(/unavailable/i);
  });
});
