import type { ComparisonRequest, ComparisonResult, ContextResponse, ErrorEnvelope } from "./types.js";

// The API base is configurable at runtime: set window.VERSUS_API_BASE before
// boot, or ship a <meta name="versus-api-base" content="..."> tag. Empty
// means same-origin.
export function apiBase(): string {
  const fromWindow = (window as { VERSUS_API_BASE?: string }).VERSUS_API_BASE;
  if (typeof fromWindow === "string") {
    return fromWindow.replace(/\/$/, "");
  }
  const meta = document.querySelector('meta[name="versus-api-base"]');
  const content = meta?.getAttribute("content") ?? "";
  return content.replace(/\/$/, "");
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly envelope: ErrorEnvelope | null,
  ) {
    super(envelope?.error?.message ?? `request failed with status ${status}`);
  }
}

async function parseEnvelope(response: Response): Promise<ErrorEnvelope | null> {
  try {
    return (await response.json()) as ErrorEnvelope;
  } catch {
    return null;
  }
}

export async function postCompare(
  request: ComparisonRequest,
  signal?: AbortSignal,
): Promise<ComparisonResult> {
  const response = await fetch(`${apiBase()}/api/compare`, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(request),
    signal,
  });
  if (!response.ok) {
    throw new ApiError(response.status, await parseEnvelope(response));
  }
  return (await response.json()) as ComparisonResult;
}

export async function fetchContext(
  sentenceId: number,
  window_: number | "FULL",
): Promise<ContextResponse> {
  const response = await fetch(
    `${apiBase()}/api/context/${sentenceId}?window=${window_}`,
  );
  if (!response.ok) {
    throw new ApiError(response.status, await parseEnvelope(response));
  }
  return (await response.json()) as ContextResponse;
}
