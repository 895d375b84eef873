// Interactive piano spanning C1..C9, with programmatic highlighting while a
// progression plays and click-to-sound keys while idle.

const WHITE_CLASSES = [0, 2, 4, 5, 7, 9, 11];

export const PIANO_LOW = 24; // C1
export const PIANO_HIGH = 120; // C9

export class PianoKeyboard {
  private keys = new Map<number, HTMLElement>();
  private highlighted = new Set<number>();

  onKeyClick: ((midi: number) => void) | null = null;

  constructor(private container: HTMLElement) {
    this.createKeys();
  }

  private createKeys(): void {
    this.container.innerHTML = "";
    this.keys.clear();

    let whiteCount = 0;
    for (let midi = PIANO_LOW; midi <= PIANO_HIGH; midi++) {
      if (WHITE_CLASSES.includes(midi % 12)) whiteCount++;
    }
    const whiteWidth = 100 / whiteCount;

    let whiteIndex = 0;
    for (let midi = PIANO_LOW; midi <= PIANO_HIGH; midi++) {
      const isWhite = WHITE_CLASSES.includes(midi % 12);
      const key = document.createElement("div");
      key.dataset.midi = String(midi);
      if (isWhite) {
        key.className = "piano-key white";
        key.style.width = `${whiteWidth}%`;
        key.style.left = `${whiteIndex * whiteWidth}%`;
        whiteIndex++;
      } else {
        key.className = "piano-key black";
        key.style.width = `${whiteWidth * 0.62}%`;
        key.style.left = `${(whiteIndex - 1) * whiteWidth + whiteWidth * 0.66}%`;
      }
      key.addEventListener("mousedown", () => {
        this.onKeyClick?.(midi);
      });
      this.keys.set(midi, key);
      this.container.appendChild(key);
    }
  }

  /** Replace the highlighted set; keys outside the range are ignored. */
  highlight(midis: Iterable<number>): void {
    for (const midi of this.highlighted) {
      this.keys.get(midi)?.classList.remove("active");
    }
    this.highlighted = new Set<number>();
    for (const midi of midis) {
      const key = this.keys.get(midi);
      if (key) {
        key.classList.add("active");
        this.highlighted.add(midi);
      }
    }
  }

  clear(): void {
    this.highlight([]);
  }

  highlightedKeys(): number[] {
    return [...this.highlighted].sort((a, b) => a - b);
  }

  keyCount(): number {
    return this.keys.size;
  }
}
