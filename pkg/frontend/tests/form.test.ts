import { afterEach, beforeEach, describe, expect, it } from "vitest";

import { buildForm, formProblem, readFormState, toRequest } from "../src/form.js";
import { type } from "./helpers.js";
import type { FormState } from "../src/form.js";

function state(overrides: Partial<FormState> = {}): FormState {
  return {
    objectA: "python",
    objectB: "matlab",
    aspects: [],
    model: "DEFAULT",
    fasterSearch: false,
    ...overrides,
  };
}

describe("formProblem", () => {
  it("accepts two distinct objects", () => {
    expect(formProblem(state())).toBeNull();
  });

  it("rejects empty objects", () => {
    expect(formProblem(state({ objectA: "" }))).toMatch(/both objects/i);
    expect(formProblem(state({ objectB: "   " }))).toMatch(/both objects/i);
  });

  it("rejects identical objects case-insensitively", () => {
    expect(formProblem(state({ objectB: "  Python " }))).toMatch(/differ/);
  });

  it("rejects duplicate aspects", () => {
    const problem = formProblem(
      state({ aspects: [{ text: "speed", weight: 3 }, { text: "Speed", weight: 1 }] }),
    );
    expect(problem).toMatch(/twice/);
  });
});

describe("form DOM", () => {
  let submitted: FormState[];

  beforeEach(() => {
    document.body.innerHTML = '<div id="form-root"></div>';
    submitted = [];
    buildForm(document.getElementById("form-root")!, (s) => submitted.push(s));
  });

  afterEach(() => {
    document.body.innerHTML = "";
  });

  const submitButton = () =>
    document.querySelector('button[type="submit"]') as HTMLButtonElement;

  it("starts with submit disabled", () => {
    expect(submitButton().disabled).toBe(true);
  });

  it("enables submit once both objects are set and distinct", () => {
    type(document.querySelector('input[name="object_a"]')!, "python");
    expect(submitButton().disabled).toBe(true);
    type(document.querySelector('input[name="object_b"]')!, "matlab");
    expect(submitButton().disabled).toBe(false);
  });

  it("blocks identical objects and shows a message", () => {
    type(document.querySelector('input[name="object_a"]')!, "python");
    type(document.querySelector('input[name="object_b"]')!, "PYTHON");
    expect(submitButton().disabled).toBe(true);
    expect(document.querySelector(".form-message")!.textContent).toMatch(/differ/);
  });

  it("ignores a submit event while invalid", () => {
    const form = document.querySelector("form") as HTMLFormElement;
    form.dispatchEvent(new Event("submit", { bubbles: true, cancelable: true }));
    expect(submitted).toHaveLength(0);
  });

  it("collects aspect rows with weights into the request", () => {
    type(document.querySelector('input[name="object_a"]')!, "python");
    type(document.querySelector('input[name="object_b"]')!, "matlab");
    type(document.querySelector(".aspect-text")!, "speed");
    const weight = document.querySelector(".aspect-weight") as HTMLSelectElement;
    weight.value = "5";
    weight.dispatchEvent(new Event("change", { bubbles: true }));

    (document.querySelector(".add-aspect") as HTMLButtonElement).click();
    const rows = document.querySelectorAll(".aspect-row");
    expect(rows).toHaveLength(2); // second row empty, should be ignored

    const formState = readFormState(document.querySelector("form")!);
    expect(formState.aspects).toEqual([{ text: "speed", weight: 5 }]);
    const request = toRequest(formState);
    expect(request).toMatchObject({
      object_a: "python",
      object_b: "matlab",
      aspects: [{ text: "speed", weight: 5 }],
      model: "DEFAULT",
      fast_mode: false,
    });
  });

  it("weight selector only offers 1..5", () => {
    const options = [...document.querySelectorAll(".aspect-weight option")].map(
      (o) => (o as HTMLOptionElement).value,
    );
    expect(options).toEqual(["1", "2", "3", "4", "5"]);
  });

  it("delivers the state on a valid submit", () => {
    type(document.querySelector('input[name="object_a"]')!, "coffee");
    type(document.querySelector('input[name="object_b"]')!, "tea");
    const form = document.querySelector("form") as HTMLFormElement;
    form.dispatchEvent(new Event("submit", { bubbles: true, cancelable: true }));
    expect(submitted).toHaveLength(1);
    expect(submitted[0].objectA).toBe("coffee");
  });
});
