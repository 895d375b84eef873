// Explorer wiring: pickers fed by the service, tempo/octave steppers, the
// progression matrix (base row plus three variations), chords-in-scale
// panel, and the auto-highlighting piano.

import { ApiClient } from "./api";
import { PianoKeyboard } from "./piano";
import { ProgressionPlayer, SynthLike } from "./player";
import {
  UiState,
  buildMatrix,
  clampOctave,
  clampTempo,
  initialState,
  matrixRowLabels,
  modeOf,
} from "./state";
import type { BaseProgressionResponse } from "./types";

const PAGE_SIZE = 100;

function mustFind<T extends HTMLElement>(root: Document, id: string): T {
  const element = root.getElementById(id);
  if (!element) throw new Error(`missing element #${id}`);
  return element as T;
}

export class ExplorerApp {
  state: UiState = initialState();
  piano: PianoKeyboard;

  private scalePicker: HTMLSelectElement;
  private lengthPicker: HTMLSelectElement;
  private progressionPicker: HTMLSelectElement;
  private banner: HTMLElement;
  private matrixTable: HTMLElement;
  private chordsPanel: HTMLElement;
  private tempoInput: HTMLInputElement;
  private octaveInput: HTMLInputElement;
  private playButton: HTMLButtonElement;
  private stopButton: HTMLButtonElement;
  private midiButton: HTMLButtonElement;
  private pageLabel: HTMLElement;
  private pagePrev: HTMLButtonElement;
  private pageNext: HTMLButtonElement;

  private page = 1;
  private totalPages = 1;
  private player: ProgressionPlayer;

  constructor(
    private root: Document,
    private client: ApiClient,
    private synth: SynthLike & { playSingle?(midi: number): Promise<void> },
  ) {
    this.scalePicker = mustFind(root, "scale-picker");
    this.lengthPicker = mustFind(root, "length-picker");
    this.progressionPicker = mustFind(root, "progression-picker");
    this.banner = mustFind(root, "banner");
    this.matrixTable = mustFind(root, "matrix");
    this.chordsPanel = mustFind(root, "chords-in-scale");
    this.tempoInput = mustFind(root, "tempo-value");
    this.octaveInput = mustFind(root, "octave-value");
    this.playButton = mustFind(root, "play-button");
    this.stopButton = mustFind(root, "stop-button");
    this.midiButton = mustFind(root, "midi-button");
    this.pageLabel = mustFind(root, "page-label");
    this.pagePrev = mustFind(root, "page-prev");
    this.pageNext = mustFind(root, "page-next");

    this.piano = new PianoKeyboard(mustFind(root, "piano"));
    this.player = new ProgressionPlayer(synth);

    this.bindControls();
    this.renderSteppers();
    this.updatePlayability();
  }

  private bindControls(): void {
    this.scalePicker.addEventListener("change", () => {
      void this.onScaleChange();
    });
    this.lengthPicker.addEventListener("change", () => {
      this.page = 1;
      void this.refreshProgressionPicker();
    });
    this.progressionPicker.addEventListener("change", () => {
      this.state.selectedProgression = this.currentPickerProgression();
      this.updatePlayability();
    });
    this.playButton.addEventListener("click", () => void this.onPlay());
    this.stopButton.addEventListener("click", () => this.player.stop());
    this.midiButton.addEventListener("click", () => void this.onDownloadMidi());
    this.pagePrev.addEventListener("click", () => void this.turnPage(-1));
    this.pageNext.addEventListener("click", () => void this.turnPage(1));

    mustFind(this.root, "tempo-down").addEventListener("click", () => this.stepTempo(-5));
    mustFind(this.root, "tempo-up").addEventListener("click", () => this.stepTempo(5));
    this.tempoInput.addEventListener("change", () =>
      this.setTempo(Number(this.tempoInput.value)),
    );
    mustFind(this.root, "octave-down").addEventListener("click", () => this.stepOctave(-1));
    mustFind(this.root, "octave-up").addEventListener("click", () => this.stepOctave(1));
    this.octaveInput.addEventListener("change", () =>
      this.setOctave(Number(this.octaveInput.value)),
    );

    this.piano.onKeyClick = (midi) => {
      if (this.state.playbackStatus.kind === "idle") {
        void this.synth.playChord([midi], this.synth.currentTime, 0.4);
      }
    };
  }

  // --- steppers ---------------------------------------------------------

  setTempo(value: number): void {
    this.state.tempoBpm = clampTempo(value);
    this.renderSteppers();
  }

  setOctave(value: number): void {
    this.state.octave = clampOctave(value);
    this.renderSteppers();
  }

  stepTempo(delta: number): void {
    this.setTempo(this.state.tempoBpm + delta);
  }

  stepOctave(delta: number): void {
    this.setOctave(this.state.octave + delta);
  }

  private renderSteppers(): void {
    this.tempoInput.value = String(this.state.tempoBpm);
    this.octaveInput.value = `${this.state.octave}`;
  }

  // --- loading ----------------------------------------------------------

  async onLoad(): Promise<void> {
    this.hideBanner();
    try {
      const scales = await this.client.getScales();
      this.scalePicker.innerHTML = "";
      for (const id of scales) {
        const option = this.root.createElement("option");
        option.value = id;
        option.textContent = id;
        this.scalePicker.appendChild(option);
      }
      this.scalePicker.value = scales[0] ?? "";
      this.state.selectedScale = scales[0] ?? null;
      await this.refreshProgressionPicker();
    } catch (error) {
      this.showBanner(`Could not reach the service: ${(error as Error).message}`);
    }
  }

  private async onScaleChange(): Promise<void> {
    const previousMode = this.state.selectedScale ? modeOf(this.state.selectedScale) : null;
    this.state.selectedScale = this.scalePicker.value || null;
    const mode = this.state.selectedScale ? modeOf(this.state.selectedScale) : null;
    if (mode !== previousMode) {
      this.page = 1;
      await this.refreshProgressionPicker();
    }
    this.updatePlayability();
  }

  get progressionLength(): number {
    return Number(this.lengthPicker.value) || 4;
  }

  async refreshProgressionPicker(): Promise<void> {
    if (!this.state.selectedScale) return;
    this.hideBanner();
    const mode = modeOf(this.state.selectedScale);
    try {
      const body = await this.client.getProgressionsPage(
        mode,
        this.progressionLength,
        this.page,
        PAGE_SIZE,
      );
      this.totalPages = body.totalPages;
      this.progressionPicker.innerHTML = "";
      for (const tokens of body.items) {
        const option = this.root.createElement("option");
        option.value = tokens.join(",");
        option.textContent = tokens.join(",");
        this.progressionPicker.appendChild(option);
      }
      this.progressionPicker.selectedIndex = body.items.length ? 0 : -1;
      this.state.selectedProgression = this.currentPickerProgression();
      this.pageLabel.textContent =
        `page ${body.page}/${body.totalPages} - ${body.totalCount} progressions`;
      const paged = body.totalPages > 1;
      this.pagePrev.hidden = this.pageNext.hidden = !paged;
      this.updatePlayability();
    } catch (error) {
      this.progressionPicker.innerHTML = "";
      this.state.selectedProgression = null;
      this.updatePlayability();
      this.showBanner(`Could not load progressions: ${(error as Error).message}`);
    }
  }

  private async turnPage(step: number): Promise<void> {
    const next = this.page + step;
    if (next < 1 || next > this.totalPages) return;
    this.page = next;
    await this.refreshProgressionPicker();
  }

  private currentPickerProgression(): string[] | null {
    const value = this.progressionPicker.value;
    return value ? value.split(",") : null;
  }

  // --- playback ---------------------------------------------------------

  async onPlay(): Promise<void> {
    const { selectedScale, selectedProgression } = this.state;
    if (!selectedScale || !selectedProgression || this.player.isPlaying) return;
    this.hideBanner();
    let response: BaseProgressionResponse;
    try {
      response = await this.client.getBaseProgression(selectedScale, selectedProgression);
    } catch (error) {
      this.showBanner(`Playback rejected: ${(error as Error).message}`);
      return;
    }
    this.renderMatrix(response);
    this.renderChordsInScale(response.chordsInScale);
    await this.player.play(response.keysInChord, {
      tempoBpm: () => this.state.tempoBpm,
      octave: () => this.state.octave,
      onChord: (index, midis) => {
        this.state.playbackStatus = { kind: "playing", chordIndex: index };
        this.piano.highlight(midis);
        this.markMatrixColumn(index);
        this.updatePlayability();
      },
      onDone: () => {
        this.state.playbackStatus = { kind: "idle" };
        this.piano.clear();
        this.markMatrixColumn(-1);
        this.updatePlayability();
      },
    });
  }

  private async onDownloadMidi(): Promise<void> {
    const { selectedScale, selectedProgression, tempoBpm, octave } = this.state;
    if (!selectedScale || !selectedProgression) return;
    try {
      const blob = await this.client.downloadMidi(
        selectedScale, selectedProgression, tempoBpm, octave,
      );
      const url = URL.createObjectURL(blob);
      const anchor = this.root.createElement("a");
      anchor.href = url;
      anchor.download = `${selectedScale}-${selectedProgression.join("-")}.mid`;
      anchor.click();
      URL.revokeObjectURL(url);
    } catch (error) {
      this.showBanner(`MIDI export failed: ${(error as Error).message}`);
    }
  }

  private updatePlayability(): void {
    const ready =
      this.state.selectedScale !== null &&
      this.state.selectedProgression !== null &&
      this.state.playbackStatus.kind === "idle";
    this.playButton.disabled = !ready;
    this.midiButton.disabled =
      this.state.selectedScale === null || this.state.selectedProgression === null;
    this.stopButton.disabled = this.state.playbackStatus.kind === "idle";
  }

  // --- rendering --------------------------------------------------------

  renderMatrix(response: BaseProgressionResponse): void {
    this.state.matrix = buildMatrix(response);
    const labels = matrixRowLabels(response);
    this.matrixTable.innerHTML = "";
    // the matrix view is for 4-chord progressions; longer ones stay list-only
    this.matrixTable.hidden = response.numericProgression.length !== 4;
    if (this.matrixTable.hidden) return;
    this.state.matrix.forEach((row, rowIndex) => {
      const tr = this.root.createElement("tr");
      const th = this.root.createElement("th");
      th.textContent = labels[rowIndex];
      tr.appendChild(th);
      for (const symbol of row) {
        const td = this.root.createElement("td");
        td.textContent = symbol;
        tr.appendChild(td);
      }
      this.matrixTable.appendChild(tr);
    });
  }

  private markMatrixColumn(chordIndex: number): void {
    const rows = this.matrixTable.querySelectorAll("tr");
    rows.forEach((tr) => {
      tr.querySelectorAll("td").forEach((td, index) => {
        td.classList.toggle("playing", index === chordIndex);
      });
    });
  }

  renderChordsInScale(symbols: string[]): void {
    this.chordsPanel.innerHTML = "";
    for (const symbol of symbols) {
      const span = this.root.createElement("span");
      span.className = "chord-chip";
      span.textContent = symbol;
      this.chordsPanel.appendChild(span);
    }
  }

  // --- banner -----------------------------------------------------------

  showBanner(message: string): void {
    this.banner.textContent = message;
    this.banner.hidden = false;
  }

  hideBanner(): void {
    this.banner.hidden = true;
    this.banner.textContent = "";
  }
}
