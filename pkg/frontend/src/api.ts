import type { BaseProgressionResponse, ProgressionPage } from "./types";

export class ApiError extends Error {
  constructor(message: string, readonly status: number) {
    super(message);
  }
}

async function errorMessage(response: Response): Promise<string> {
  try {
    const body = await response.json();
    const detail = body?.detail;
    if (typeof detail === "string") return detail;
    if (detail?.message) return detail.message;
  } catch {
    // fall through to the status line
  }
  return `${response.status} ${response.statusText}`;
}

export class ApiClient {
  constructor(readonly baseUrl: string, private fetcher: typeof fetch = fetch) {}

  private async getJson<T>(path: string): Promise<T> {
    const response = await this.fetcher(`${this.baseUrl}${path}`);
    if (!response.ok) throw new ApiError(await errorMessage(response), response.status);
    return (await response.json()) as T;
  }

  async getScales(): Promise<string[]> {
    const body = await this.getJson<{ scales: string[] }>("/scales");
    return body.scales;
  }

  async getProgressionsPage(
    mode: string,
    length: number,
    page = 1,
    pageSize = 100,
  ): Promise<ProgressionPage> {
    const query = `mode=${mode}&length=${length}&page=${page}&pageSize=${pageSize}`;
    return this.getJson<ProgressionPage>(`/progressions?${query}`);
  }

  /** Every numeric progression of a mode, walking all pages. */
  async getAllProgressions(mode: string, length: number): Promise<string[][]> {
    const items: string[][] = [];
    let page = 1;
    for (;;) {
      const body = await this.getProgressionsPage(mode, length, page);
      items.push(...body.items);
      if (page >= body.totalPages || body.items.length === 0) return items;
      page += 1;
    }
  }

  async getBaseProgression(
    scale: string,
    progression: string[],
  ): Promise<BaseProgressionResponse> {
    const response = await this.fetcher(`${this.baseUrl}/base-progression`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ scale, progression }),
    });
    if (!response.ok) throw new ApiError(await errorMessage(response), response.status);
    return (await response.json()) as BaseProgressionResponse;
  }

  async downloadMidi(
    scale: string,
    progression: string[],
    tempo: number,
    octave: number,
  ): Promise<Blob> {
    const response = await this.fetcher(`${this.baseUrl}/midi`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ scale, progression, tempo, octave }),
    });
    if (!response.ok) throw new ApiError(await errorMessage(response), response.status);
    return response.blob();
  }
}
