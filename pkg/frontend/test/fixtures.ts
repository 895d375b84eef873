// Responses recorded from the running service (GET /scales,
// GET /progressions?mode=major&length=4, POST /base-progression for
// C-major + 1,5,6,4), plus the per-chord MIDI sets read back from the
// service's own /midi export of the same selection at 120 BPM, octave 4.

import type { BaseProgressionResponse, ProgressionPage } from "../src/types";

export const RECORDED_SCALES: string[] = [
  "C-major", "C#-major", "Cb-major", "D-major", "D#-major", "Db-major",
  "E-major", "E#-major", "Eb-major", "F-major", "F#-major", "Fb-major",
  "G-major", "G#-major", "Gb-major", "A-major", "A#-major", "Ab-major",
  "B-major", "B#-major", "Bb-major", "C-minor", "C#-minor", "Cb-minor",
  "D-minor", "D#-minor", "Db-minor", "E-minor", "E#-minor", "Eb-minor",
  "F-minor", "F#-minor", "Fb-minor", "G-minor", "G#-minor", "Gb-minor",
  "A-minor", "A#-minor", "Ab-minor", "B-minor", "B#-minor", "Bb-minor",
];

export const RECORDED_BASE: BaseProgressionResponse = {
  scaleId: "C-major",
  numericProgression: ["1", "5", "6", "4"],
  scaleProgression: ["C", "G", "Am", "F"],
  keysInChord: [
    ["C", "E", "G"],
    ["G", "B", "D"],
    ["A", "C", "E"],
    ["F", "A", "C"],
  ],
  chordsInScale: ["C", "Dm", "Em", "F", "G", "Am", "Bdim"],
  variations: [
    {
      scaleId: "F-major",
      scaleProgression: ["F", "C", "Dm", "Bb"],
      keysInChord: [
        ["F", "A", "C"],
        ["C", "E", "G"],
        ["D", "F", "A"],
        ["Bb", "D", "F"],
      ],
    },
    {
      scaleId: "G-major",
      scaleProgression: ["G", "D", "Em", "C"],
      keysInChord: [
        ["G", "B", "D"],
        ["D", "F#", "A"],
        ["E", "G", "B"],
        ["C", "E", "G"],
      ],
    },
    {
      scaleId: "A-minor",
      scaleProgression: ["Am", "Em", "F", "Dm"],
      keysInChord: [
        ["A", "C", "E"],
        ["E", "G", "B"],
        ["F", "A", "C"],
        ["D", "F", "A"],
      ],
    },
  ],
};

// Note numbers per chord from the service's MIDI export of the selection
// above (octave 4): the highlight sequence must follow these exactly.
export const RECORDED_MIDI_SEQUENCE: number[][] = [
  [60, 64, 67],
  [67, 71, 74],
  [69, 72, 76],
  [65, 69, 72],
];

export const RECORDED_MAJOR_PAGE: ProgressionPage = {
  mode: "major",
  length: 4,
  page: 1,
  pageSize: 100,
  totalCount: 63,
  totalPages: 1,
  items: [
    ["1", "1", "1", "1"], ["1", "1", "1", "2"], ["1", "1", "1", "3"],
    ["1", "1", "1", "4"], ["1", "1", "1", "5"], ["1", "1", "1", "6"],
    ["1", "1", "1", "7"], ["1", "1", "2", "7"], ["1", "1", "2", "5"],
    ["1", "1", "3", "4"], ["1", "1", "3", "6"], ["1", "1", "4", "2"],
    ["1", "1", "4", "7"], ["1", "1", "4", "5"], ["1", "1", "4", "1"],
    ["1", "1", "5", "6"], ["1", "1", "5", "1"], ["1", "1", "6", "4"],
    ["1", "1", "6", "2"], ["1", "1", "7", "1"], ["1", "2", "7", "1"],
    ["1", "2", "5", "6"], ["1", "2", "5", "1"], ["1", "3", "4", "2"],
    ["1", "3", "4", "7"], ["1", "3", "4", "5"], ["1", "3", "4", "1"],
    ["1", "3", "6", "4"], ["1", "3", "6", "2"], ["1", "4", "2", "7"],
    ["1", "4", "2", "5"], ["1", "4", "7", "1"], ["1", "4", "5", "6"],
    ["1", "4", "5", "1"], ["1", "4", "1", "1"], ["1", "4", "1", "2"],
    ["1", "4", "1", "3"], ["1", "4", "1", "4"], ["1", "4", "1", "5"],
    ["1", "4", "1", "6"], ["1", "4", "1", "7"], ["1", "5", "6", "4"],
    ["1", "5", "6", "2"], ["1", "5", "1", "1"], ["1", "5", "1", "2"],
    ["1", "5", "1", "3"], ["1", "5", "1", "4"], ["1", "5", "1", "5"],
    ["1", "5", "1", "6"], ["1", "5", "1", "7"], ["1", "6", "4", "2"],
    ["1", "6", "4", "7"], ["1", "6", "4", "5"], ["1", "6", "4", "1"],
    ["1", "6", "2", "7"], ["1", "6", "2", "5"], ["1", "7", "1", "1"],
    ["1", "7", "1", "2"], ["1", "7", "1", "3"], ["1", "7", "1", "4"],
    ["1", "7", "1", "5"], ["1", "7", "1", "6"], ["1", "7", "1", "7"],
  ],
};
