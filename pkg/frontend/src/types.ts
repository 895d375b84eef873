// Shapes of the service responses. The UI displays these verbatim and never
// derives chord content on its own.

export interface VariationEntry {
  scaleId: string;
  scaleProgression: string[];
  keysInChord: string[][];
}

export interface BaseProgressionResponse {
  scaleId: string;
  numericProgression: string[];
  scaleProgression: string[];
  keysInChord: string[][];
  chordsInScale: string[];
  variations: VariationEntry[];
}

export interface ProgressionPage {
  mode: string;
  length: number;
  page: number;
  pageSize: number;
  totalCount: number;
  totalPages: number;
  items: string[][];
}
