// Shared scaffolding: the app's DOM skeleton, a fetch stub serving recorded
// responses, and a synth stand-in that resolves on a microtask.

import type { SynthLike } from "../src/player";

export function mountDom(): void {
  document.body.innerHTML = `
    <div id="banner" hidden></div>
    <select id="scale-picker"></select>
    <select id="length-picker">
      <option value="4" selected>4 chords</option>
      <option value="8">8 chords</option>
    </select>
    <select id="progression-picker"></select>
    <button id="page-prev" hidden></button>
    <span id="page-label"></span>
    <button id="page-next" hidden></button>
    <button id="tempo-down"></button>
    <input id="tempo-value" type="number" />
    <button id="tempo-up"></button>
    <button id="octave-down"></button>
    <input id="octave-value" type="number" />
    <button id="octave-up"></button>
    <button id="play-button"></button>
    <button id="stop-button"></button>
    <button id="midi-button"></button>
    <table id="matrix" hidden></table>
    <div id="piano"></div>
    <div id="chords-in-scale"></div>
  `;
}

export type Route = (url: URL, init?: RequestInit) => unknown;

/** fetch stand-in routing by pathname; route values are JSON bodies or Responses. */
export function fetchStub(routes: Record<string, Route>): typeof fetch {
  return (async (input: RequestInfo | URL, init?: RequestInit) => {
    const url = new URL(String(input));
    const route = routes[url.pathname];
    if (!route) {
      return new Response(JSON.stringify({ detail: "Not Found" }), { status: 404 });
    }
    const body = await route(url, init);
    if (body instanceof Response) return body;
    return new Response(JSON.stringify(body), {
      status: 200,
      headers: { "Content-Type": "application/json" },
    });
  }) as typeof fetch;
}

export interface RecordedChord {
  midis: number[];
  durationSeconds: number;
}

export class FakeSynth implements SynthLike {
  currentTime = 0;
  calls: RecordedChord[] = [];
  onChordScheduled: ((call: RecordedChord, index: number) => void) | null = null;

  async playChord(midis: number[], _startTime: number, durationSeconds: number): Promise<void> {
    const call = { midis: [...midis], durationSeconds };
    this.calls.push(call);
    this.onChordScheduled?.(call, this.calls.length - 1);
    this.currentTime += durationSeconds;
    await Promise.resolve();
  }
}
