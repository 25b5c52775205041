import type { ComparisonRequest, Model, WeightedAspect } from "./types.js";
import { tokenize } from "./text.js";

export interface FormState {
  objectA: string;
  objectB: string;
  aspects: WeightedAspect[];
  model: Model;
  fasterSearch: boolean;
}

const WEIGHTS = [1, 2, 3, 4, 5];

export function formProblem(state: FormState): string | null {
  const a = tokenize(state.objectA);
  const b = tokenize(state.objectB);
  if (a.length === 0 || b.length === 0) {
    return "Enter both objects to compare.";
  }
  if (a.join(" ") === b.join(" ")) {
    return "The two objects must differ.";
  }
  const seen = new Set<string>();
  for (const aspect of state.aspects) {
    const key = aspect.text.trim().toLowerCase();
    if (seen.has(key)) {
      return `Aspect "${aspect.text}" is listed twice.`;
    }
    seen.add(key);
    if (aspect.weight < 1 || aspect.weight > 5) {
      return "Aspect weights must be between 1 and 5.";
    }
  }
  return null;
}

export function toRequest(state: FormState): ComparisonRequest {
  return {
    object_a: state.objectA.trim(),
    object_b: state.objectB.trim(),
    aspects: state.aspects,
    model: state.model,
    fast_mode: state.fasterSearch,
  };
}

export function readFormState(form: HTMLFormElement): FormState {
  const objectA = (form.querySelector('input[name="object_a"]') as HTMLInputElement).value;
  const objectB = (form.querySelector('input[name="object_b"]') as HTMLInputElement).value;
  const aspects: WeightedAspect[] = [];
  for (const row of form.querySelectorAll(".aspect-row")) {
    const text = (row.querySelector(".aspect-text") as HTMLInputElement).value.trim();
    const weight = Number((row.querySelector(".aspect-weight") as HTMLSelectElement).value);
    if (text) {
      aspects.push({ text, weight });
    }
  }
  const model = (form.querySelector('input[name="model"]:checked') as HTMLInputElement)
    .value as Model;
  const fasterSearch = (form.querySelector('input[name="fast"]') as HTMLInputElement).checked;
  return { objectA, objectB, aspects, model, fasterSearch };
}

function aspectRow(): HTMLElement {
  const row = document.createElement("div");
  row.className = "aspect-row";
  const options = WEIGHTS.map(
    (w) => `<option value="${w}"${w === 3 ? " selected" : ""}>${w}</option>`,
  ).join("");
  row.innerHTML = `
    <input class="aspect-text" type="text" placeholder="aspect, e.g. speed">
    <label class="weight-label">weight
      <select class="aspect-weight">${options}</select>
    </label>
    <button type="button" class="remove-aspect" title="Remove aspect">&times;</button>`;
  return row;
}

export function buildForm(
  root: HTMLElement,
  onSubmit: (state: FormState) => void,
): HTMLFormElement {
  const form = document.createElement("form");
  form.className = "compare-form";
  form.noValidate = true;
  form.innerHTML = `
    <div class="objects-row">
      <input name="object_a" type="text" placeholder="first object, e.g. python" autocomplete="off">
      <span class="vs">vs</span>
      <input name="object_b" type="text" placeholder="second object, e.g. matlab" autocomplete="off">
    </div>
    <div class="aspect-rows"></div>
    <button type="button" class="add-aspect">+ add aspect</button>
    <div class="model-row">
      <label><input type="radio" name="model" value="DEFAULT" checked> Default</label>
      <label><input type="radio" name="model" value="BOW"> BoW</label>
      <label class="fast-label"><input type="checkbox" name="fast"> Faster search</label>
    </div>
    <button type="submit" disabled>Compare</button>
    <p class="form-message" role="alert"></p>`;

  const submit = form.querySelector('button[type="submit"]') as HTMLButtonElement;
  const message = form.querySelector(".form-message") as HTMLElement;

  const refresh = () => {
    const problem = formProblem(readFormState(form));
    submit.disabled = problem !== null;
    // only nag once the user has typed something in both fields
    const state = readFormState(form);
    message.textContent =
      problem !== null && state.objectA.trim() && state.objectB.trim() ? problem : "";
  };

  form.addEventListener("input", refresh);
  form.addEventListener("change", refresh);
  form.addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    if (target.closest(".add-aspect")) {
      (form.querySelector(".aspect-rows") as HTMLElement).appendChild(aspectRow());
      refresh();
    } else if (target.closest(".remove-aspect")) {
      target.closest(".aspect-row")?.remove();
      refresh();
    }
  });
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const state = readFormState(form);
    if (formProblem(state) === null) {
      onSubmit(state);
    }
  });

  (form.querySelector(".aspect-rows") as HTMLElement).appendChild(aspectRow());
  root.appendChild(form);
  refresh();
  return form;
}

export function showFieldErrors(
  form: HTMLFormElement,
  details: Array<{ field: string; message: string }>,
): void {
  const message = form.querySelector(".form-message") as HTMLElement;
  message.textContent = details.map((d) => `${d.field}: ${d.message}`).join(" — ");
  for (const input of form.querySelectorAll("input")) {
    input.classList.remove("invalid");
  }
  for (const detail of details) {
    const input = form.querySelector(`input[name="${detail.field}"]`);
    input?.classList.add("invalid");
  }
}
