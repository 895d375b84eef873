// Simple sustained-tone synthesizer on the Web Audio clock. One oscillator
// per MIDI note with a short attack/release envelope to avoid clicks.

import { frequencyOf } from "./notes";

const ATTACK = 0.015;
const RELEASE = 0.05;
const GAIN = 0.18;

export class ChordSynth {
  private ctx: AudioContext | null = null;

  private context(): AudioContext {
    if (!this.ctx) {
      this.ctx = new AudioContext();
    }
    if (this.ctx.state === "suspended") {
      void this.ctx.resume();
    }
    return this.ctx;
  }

  get currentTime(): number {
    return this.context().currentTime;
  }

  /**
   * Schedule a chord at an absolute audio-clock time; returns a promise that
   * resolves when the chord's audio actually ends.
   */
  playChord(midis: number[], startTime: number, durationSeconds: number): Promise<void> {
    const ctx = this.context();
    const start = Math.max(startTime, ctx.currentTime);
    const stop = start + durationSeconds;
    const done: Promise<void>[] = [];
    for (const midi of midis) {
      const oscillator = ctx.createOscillator();
      const envelope = ctx.createGain();
      oscillator.type = "triangle";
      oscillator.frequency.value = frequencyOf(midi);
      envelope.gain.setValueAtTime(0, start);
      envelope.gain.linearRampToValueAtTime(GAIN, start + ATTACK);
      envelope.gain.setValueAtTime(GAIN, Math.max(start + ATTACK, stop - RELEASE));
      envelope.gain.linearRampToValueAtTime(0, stop);
      oscillator.connect(envelope).connect(ctx.destination);
      oscillator.start(start);
      oscillator.stop(stop);
      done.push(
        new Promise((resolve) => {
          oscillator.onended = () => {
            oscillator.disconnect();
            envelope.disconnect();
            resolve();
          };
        }),
      );
    }
    return Promise.all(done).then(() => undefined);
  }

  /** One key pressed by hand: a short tone starting now. */
  playSingle(midi: number, durationSeconds = 0.4): Promise<void> {
    return this.playChord([midi], this.currentTime, durationSeconds);
  }
}
