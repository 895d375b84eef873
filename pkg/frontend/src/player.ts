// Chord-by-chord playback. Each chord is scheduled on the audio clock and
// the next one starts only after the previous chord's sound has finished,
// so tempo and octave stepper changes take effect from the next chord.

import { placeChord } from "./notes";

export interface SynthLike {
  readonly currentTime: number;
  playChord(midis: number[], startTime: number, durationSeconds: number): Promise<void>;
}

export interface PlayerHooks {
  tempoBpm(): number;
  octave(): number;
  onChord(index: number, midis: number[]): void;
  onDone(): void;
}

export class ProgressionPlayer {
  private stopRequested = false;
  private running = false;

  constructor(private synth: SynthLike) {}

  get isPlaying(): boolean {
    return this.running;
  }

  async play(keysInChord: string[][], hooks: PlayerHooks): Promise<void> {
    if (this.running) return;
    this.running = true;
    this.stopRequested = false;
    try {
      for (let index = 0; index < keysInChord.length; index++) {
        if (this.stopRequested) break;
        const midis = placeChord(keysInChord[index], hooks.octave());
        const seconds = 60 / hooks.tempoBpm(); // one beat per chord
        hooks.onChord(index, midis);
        await this.synth.playChord(midis, this.synth.currentTime, seconds);
      }
    } finally {
      this.running = false;
      hooks.onDone();
    }
  }

  stop(): void {
    this.stopRequested = true;
  }
}
