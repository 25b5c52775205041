import { ApiError, postCompare } from "./api.js";
import { buildForm, showFieldErrors, toRequest, type FormState } from "./form.js";
import { renderAnswer } from "./view.js";
import type { ComparisonRequest, ErrorDetail } from "./types.js";

export function boot(doc: Document): void {
  const formRoot = doc.getElementById("form-root");
  const statusRoot = doc.getElementById("status-root");
  const answerRoot = doc.getElementById("answer-root");
  if (!formRoot || !statusRoot || !answerRoot) {
    throw new Error("missing #form-root, #status-root, or #answer-root");
  }

  let controller: AbortController | null = null;
  let lastRequest: ComparisonRequest | null = null;

  const setStatus = (html: string) => {
    statusRoot.innerHTML = html;
  };

  const run = async (request: ComparisonRequest) => {
    controller?.abort(); // at most one compare in flight
    controller = new AbortController();
    lastRequest = request;
    setStatus('<p class="status-loading">Comparing…</p>');
    try {
      const result = await postCompare(request, controller.signal);
      setStatus("");
      const view = renderAnswer(answerRoot, result);
      view.setUserSelection([]); // user chips start unselected
    } catch (error) {
      if (error instanceof DOMException && error.name === "AbortError") {
        return; // superseded by a newer submit
      }
      if (error instanceof ApiError && error.status === 400) {
        const details = (error.envelope?.error?.details ?? []) as ErrorDetail[];
        showFieldErrors(form, Array.isArray(details) ? details : []);
        setStatus("");
        return;
      }
      setStatus(`
        <div class="banner banner-error">
          <span>Comparison failed${error instanceof ApiError ? ` (${error.status})` : ""}.</span>
          <button type="button" class="retry">Retry</button>
        </div>`);
    }
  };

  const form = buildForm(formRoot, (state: FormState) => {
    void run(toRequest(state));
  });

  statusRoot.addEventListener("click", (event) => {
    if ((event.target as HTMLElement).closest(".retry") && lastRequest) {
      void run(lastRequest);
    }
  });
}
