import { ApiClient } from "./api";
import { ExplorerApp } from "./app";
import { ChordSynth } from "./synth";

function resolveBaseUrl(): string {
  const fromQuery = new URLSearchParams(window.location.search).get("api");
  return (fromQuery ?? "http://127.0.0.1:8000").replace(/\/$/, "");
}

const app = new ExplorerApp(document, new ApiClient(resolveBaseUrl()), new ChordSynth());
void app.onLoad();
