import { describe, expect, it } from "vitest";

import {
  OCTAVE_DEFAULT,
  TEMPO_DEFAULT,
  buildMatrix,
  clampOctave,
  clampTempo,
  initialState,
  matrixRowLabels,
  modeOf,
} from "../src/state";
import { RECORDED_BASE } from "./fixtures";

describe("steppers", () => {
  it("clamps tempo to 20..300", () => {
    expect(clampTempo(19)).toBe(20);
    expect(clampTempo(20)).toBe(20);
    expect(clampTempo(300)).toBe(300);
    expect(clampTempo(301)).toBe(300);
    expect(clampTempo(Number.NaN)).toBe(20);
  });

  it("clamps octave to 1..9", () => {
    expect(clampOctave(0)).toBe(1);
    expect(clampOctave(10)).toBe(9);
    expect(clampOctave(4)).toBe(4);
  });

  it("defaults to 120 BPM at C4", () => {
    const state = initialState();
    expect(state.tempoBpm).toBe(TEMPO_DEFAULT);
    expect(state.tempoBpm).toBe(120);
    expect(state.octave).toBe(OCTAVE_DEFAULT);
    expect(state.octave).toBe(4);
    expect(state.playbackStatus).toEqual({ kind: "idle" });
  });
});

describe("matrix", () => {
  it("is the base row plus the three variations, verbatim", () => {
    const matrix = buildMatrix(RECORDED_BASE);
    expect(matrix).toHaveLength(4);
    expect(JSON.stringify(matrix[0])).toBe(JSON.stringify(RECORDED_BASE.scaleProgression));
    RECORDED_BASE.variations.forEach((variation, index) => {
      expect(JSON.stringify(matrix[index + 1])).toBe(
        JSON.stringify(variation.scaleProgression),
      );
    });
  });

  it("labels rows with the scale ids from the response", () => {
    expect(matrixRowLabels(RECORDED_BASE)).toEqual([
      "C-major", "F-major", "G-major", "A-minor",
    ]);
  });
});

describe("modeOf", () => {
  it("reads the mode half of a scale id", () => {
    expect(modeOf("C#-major")).toBe("major");
    expect(modeOf("A-minor")).toBe("minor");
  });
});
