import type { BaseProgressionResponse } from "./types";

export const TEMPO_MIN = 20;
export const TEMPO_MAX = 300;
export const TEMPO_DEFAULT = 120;
export const OCTAVE_MIN = 1;
export const OCTAVE_MAX = 9;
export const OCTAVE_DEFAULT = 4;

export type PlaybackStatus = { kind: "idle" } | { kind: "playing"; chordIndex: number };

export interface UiState {
  selectedScale: string | null;
  selectedProgression: string[] | null;
  tempoBpm: number;
  octave: number;
  playbackStatus: PlaybackStatus;
  matrix: string[][];
}

export function initialState(): UiState {
  return {
    selectedScale: null,
    selectedProgression: null,
    tempoBpm: TEMPO_DEFAULT,
    octave: OCTAVE_DEFAULT,
    playbackStatus: { kind: "idle" },
    matrix: [],
  };
}

function clamp(value: number, min: number, max: number): number {
  if (Number.isNaN(value)) return min;
  return Math.min(max, Math.max(min, Math.round(value)));
}

export function clampTempo(value: number): number {
  return clamp(value, TEMPO_MIN, TEMPO_MAX);
}

export function clampOctave(value: number): number {
  return clamp(value, OCTAVE_MIN, OCTAVE_MAX);
}

/** Mode half of a scale id ("C#-major" -> "major"). */
export function modeOf(scaleId: string): string {
  return scaleId.split("-")[1] ?? "";
}

/**
 * The 4xL display matrix: base progression first, then the three
 * variations, every cell verbatim from the service response.
 */
export function buildMatrix(response: BaseProgressionResponse): string[][] {
  return [
    [...response.scaleProgression],
    ...response.variations.map((variation) => [...variation.scaleProgression]),
  ];
}

/** Row labels matching buildMatrix: the scale each row is played in. */
export function matrixRowLabels(response: BaseProgressionResponse): string[] {
  return [response.scaleId, ...response.variations.map((variation) => variation.scaleId)];
}
