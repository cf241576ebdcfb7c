// Analysis playground: send text to /analyze, render the analysis lines.

import { AnalyzedToken, ApiClient } from "./api.js";

export interface PanelRow {
  token: string;
  lines: string[];
  unknown: boolean;
}

export class AnalysisPanelController {
  private rows: PanelRow[] = [];

  constructor(private api: ApiClient) {}

  async analyze(text: string, script = "auto"): Promise<void> {
    if (text.trim() === "") {
      this.rows = [];
      return;
    }
    const tokens: AnalyzedToken[] = await this.api.analyze(text, script);
    this.rows = tokens.map((t) => ({
      token: t.token,
      lines: t.analyses.map((a) => a.line),
      unknown: t.analyses.length === 0,
    }));
  }

  result(): PanelRow[] {
    return this.rows.map((r) => ({ ...r, lines: r.lines.slice() }));
  }

  renderedLines(): string[] {
    return this.rows.flatMap((r) =>
      r.unknown ? [`${r.token}: no analysis`] : r.lines);
  }
}
