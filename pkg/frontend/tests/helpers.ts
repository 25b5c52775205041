import { boot } from "../src/main.js";
import type { StubServer } from "./stub.js";

export function mountApp(stub: StubServer): void {
  document.body.innerHTML = `
    <div id="form-root"></div>
    <div id="status-root"></div>
    <div id="answer-root"></div>`;
  (window as { VERSUS_API_BASE?: string }).VERSUS_API_BASE = stub.baseUrl;
  boot(document);
}

export function type(input: HTMLInputElement, value: string): void {
  input.value = value;
  input.dispatchEvent(new Event("input", { bubbles: true }));
}

export function fillObjects(a: string, b: string): void {
  type(document.querySelector('input[name="object_a"]') as HTMLInputElement, a);
  type(document.querySelector('input[name="object_b"]') as HTMLInputElement, b);
}

export function submitForm(): void {
  const form = document.querySelector("form.compare-form") as HTMLFormElement;
  form.dispatchEvent(new Event("submit", { bubbles: true, cancelable: true }));
}

export async function until(
  condition: () => boolean,
  timeoutMs = 3000,
): Promise<void> {
  const started = Date.now();
  while (!condition()) {
    if (Date.now() - started > timeoutMs) {
      throw new Error("timed out waiting for condition");
    }
    await new Promise((resolve) => setTimeout(resolve, 10));
  }
}

export function cardTexts(selector: string): string[] {
  return [...document.querySelectorAll(`${selector} .card .card-text`)].map(
    (el) => el.textContent?.trim() ?? "",
  );
}
