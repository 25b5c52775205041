import { afterEach, beforeEach, describe, expect, it } from "vitest";

import { makeResult, manyAspects } from "./fixtures.js";
import { startStub, type StubServer } from "./stub.js";
import { cardTexts, fillObjects, mountApp, submitForm, until } from "./helpers.js";

describe("aspect chips", () => {
  let stub: StubServer;

  afterEach(async () => {
    await stub.close();
    document.body.innerHTML = "";
  });

  async function renderAnswerWith(result: ReturnType<typeof makeResult>) {
    stub = await startStub({ compare: result });
    mountApp(stub);
    fillObjects("python", "matlab");
    submitForm();
    await until(() => document.querySelectorAll(".card").length > 0);
  }

  it("caps rendered chips at ten even when the payload has more", async () => {
    await renderAnswerWith(makeResult({ generated_aspects: manyAspects(12) }));
    expect(document.querySelectorAll(".chip")).toHaveLength(10);
  });

  it("toggling an A-assigned chip filters only the pro column", async () => {
    await renderAnswerWith(makeResult());
    const before = cardTexts(".cards-b");
    const chip = document.querySelector('.chip[data-side="OBJECT_A"]') as HTMLElement;
    expect(chip.dataset.phrase).toBe("faster");
    chip.click();

    expect(cardTexts(".cards-b")).toEqual(before); // con column untouched
    const proTexts = cardTexts(".cards-a");
    expect(proTexts).toHaveLength(1);
    expect(proTexts[0]).toMatch(/faster/);
    expect(chip.getAttribute("aria-pressed")).toBe("true");
  });

  it("deselecting all chips restores the full lists", async () => {
    await renderAnswerWith(makeResult());
    const fullA = cardTexts(".cards-a");
    const chip = document.querySelector('.chip[data-side="OBJECT_A"]') as HTMLElement;
    chip.click();
    expect(cardTexts(".cards-a")).not.toEqual(fullA);
    chip.click();
    expect(cardTexts(".cards-a")).toEqual(fullA);
    expect(chip.getAttribute("aria-pressed")).toBe("false");
  });

  it("two selected chips show the union of their survivor sets", async () => {
    await renderAnswerWith(makeResult());
    const chips = document.querySelectorAll<HTMLElement>('.chip[data-side="OBJECT_A"]');
    expect(chips.length).toBe(2); // "faster" and "cheaper"
    chips[0].click();
    const onlyFirst = cardTexts(".cards-a");
    chips[0].click();
    chips[1].click();
    const onlySecond = cardTexts(".cards-a");
    chips[0].click(); // both selected now
    const both = cardTexts(".cards-a");
    expect(new Set(both)).toEqual(new Set([...onlyFirst, ...onlySecond]));
    expect(both.length).toBe(2);
  });

  it("chip toggling never re-queries the server", async () => {
    await renderAnswerWith(makeResult());
    const compares = stub.requests.filter((r) => r.path.startsWith("/api/compare"));
    expect(compares).toHaveLength(1);
    (document.querySelector(".chip") as HTMLElement).click();
    (document.querySelector(".chip") as HTMLElement).click();
    const after = stub.requests.filter((r) => r.path.startsWith("/api/compare"));
    expect(after).toHaveLength(1);
  });
});
