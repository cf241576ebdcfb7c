// Thin typed client for the urdu-morph HTTP service.  The fetch function is
// injected so tests can run against a fake server.

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export interface KeyboardKey {
  urdu: string;
  roman: string;
  phonetic: string;
  diacritic: boolean;
}

export interface AnalysisLine {
  line: string;
  lemma: string;
  lemma_id: number;
  urdu: string;
  word_class: string;
  features: string[];
  inherent: string[];
}

export interface AnalyzedToken {
  token: string;
  analyses: AnalysisLine[];
}

export interface CandidateItem {
  paradigm: string;
  stem: string;
  forms: string[];
  attested: boolean[];
  frequency: number;
  status: string;
  edited_forms?: string[];
}

export interface CandidatePage {
  items: CandidateItem[];
  total: number;
  page: number;
  page_size: number;
}

export type Verdict = "accept" | "reject" | "edit";

export interface Decision {
  list_id: string;
  paradigm: string;
  stem: string;
  verdict: Verdict;
  edited_forms?: string[];
  reviewer?: string;
}

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export class ApiClient {
  constructor(private baseUrl: string, private fetchFn: FetchLike) {}

  private async get<T>(path: string, params: Record<string, string>): Promise<T> {
    const q = new URLSearchParams(params).toString();
    const resp = await this.fetchFn(`${this.baseUrl}${path}?${q}`);
    if (!resp.ok) {
      throw new ApiError(resp.status, await resp.text());
    }
    return (await resp.json()) as T;
  }

  async keyboardLayout(): Promise<KeyboardKey[]> {
    const data = await this.get<{ keys: KeyboardKey[] }>("/keyboard-layout", {});
    return data.keys;
  }

  async analyze(text: string, script = "auto"): Promise<AnalyzedToken[]> {
    const data = await this.get<{ tokens: AnalyzedToken[] }>("/analyze", {
      text,
      script,
    });
    return data.tokens;
  }

  async translit(text: string, to: "urdu" | "roman" | "phonetic"): Promise<string> {
    const data = await this.get<{ result: string }>("/translit", { text, to });
    return data.result;
  }

  async candidates(
    list: string,
    status = "pending",
    page = 0,
    pageSize = 50,
  ): Promise<CandidatePage> {
    return this.get<CandidatePage>("/candidates", {
      list,
      status,
      page: String(page),
      page_size: String(pageSize),
    });
  }

  async decide(decision: Decision): Promise<void> {
    const resp = await this.fetchFn(`${this.baseUrl}/decisions`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(decision),
    });
    if (!resp.ok) {
      throw new ApiError(resp.status, await resp.text());
    }
  }

  async extract(corpus: string, script = "urdu", format = "plain"): Promise<string> {
    const resp = await this.fetchFn(`${this.baseUrl}/extract`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ corpus, script, format }),
    });
    if (!resp.ok) {
      throw new ApiError(resp.status, await resp.text());
    }
    const data = (await resp.json()) as { list_id: string };
    return data.list_id;
  }
}
