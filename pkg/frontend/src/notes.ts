// Key placement for playback: combine the service's note spellings with the
// octave stepper. Chord content always comes from the service; this module
// only decides which physical key sounds a given spelling.

const LETTER_ORDER = ["C", "D", "E", "F", "G", "A", "B"];
const BASE_SEMITONE: Record<string, number> = { C: 0, D: 2, E: 4, F: 5, G: 7, A: 9, B: 11 };

export interface ParsedNote {
  letter: string;
  accidental: number;
}

export function parseNoteName(text: string): ParsedNote {
  const match = /^([A-G])(bb|b|##|#)?$/.exec(text);
  if (!match) throw new Error(`bad note name: ${text}`);
  const accidentalText = match[2] ?? "";
  const accidental =
    accidentalText === "##" ? 2 : accidentalText === "#" ? 1 :
    accidentalText === "bb" ? -2 : accidentalText === "b" ? -1 : 0;
  return { letter: match[1], accidental };
}

export function midiOf(note: ParsedNote, octave: number): number {
  return 12 * (octave + 1) + BASE_SEMITONE[note.letter] + note.accidental;
}

/**
 * MIDI numbers for one chord at the chosen octave. The root takes the
 * octave; later notes whose letters wrap past B move up one octave, so the
 * triad ascends (the same layout the service uses in its MIDI export).
 */
export function placeChord(keyNames: string[], octave: number): number[] {
  const midis: number[] = [];
  let currentOctave = octave;
  let previousLetter: string | null = null;
  for (const name of keyNames) {
    const note = parseNoteName(name);
    if (previousLetter !== null) {
      if (LETTER_ORDER.indexOf(note.letter) < LETTER_ORDER.indexOf(previousLetter)) {
        currentOctave += 1;
      }
    }
    previousLetter = note.letter;
    midis.push(midiOf(note, currentOctave));
  }
  return midis;
}

export function frequencyOf(midi: number): number {
  return 440 * Math.pow(2, (midi - 69) / 12);
}
