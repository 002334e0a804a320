//! Prompting and generation: builds the two prompts used to produce contract
//! encodings and query encodings, talks to a chat-completions API, and
//! extracts code from model responses.

use std::time::Duration;

use serde::{Deserialize, Serialize};

/// Template for turning a plain-text insurance contract into a logic-program
/// encoding. `{text_content}` is replaced by the contract text.
pub const POLICY_PROMPT_TEMPLATE: &str = include_str!("../assets/policy_prompt.txt");

/// Template for turning a natural-language question into a query against an
/// existing encoding. Placeholders: `{query}`, `{text_content}`,
/// `{policy_encoding}`.
pub const QUERY_PROMPT_TEMPLATE: &str = include_str!("../assets/query_prompt.txt");

/// Renders the contract-encoding prompt.
pub fn policy_prompt(contract_text: &str) -> String {
    fill_template(POLICY_PROMPT_TEMPLATE, &[("text_content", contract_text)])
}

/// Renders the query-encoding prompt.
pub fn query_prompt(question: &str, contract_text: &str, policy_encoding: &str) -> String {
    fill_template(
        QUERY_PROMPT_TEMPLATE,
        &[
            ("query", question),
            ("text_content", contract_text),
            ("policy_encoding", policy_encoding),
        ],
    )
}

/// Replaces `{key}` placeholders in one pass. Substituted content is never
/// rescanned, so values containing placeholder-like text pass through
/// untouched; unknown `{...}` sequences are left as-is.
fn fill_template(template: &str, values: &[(&str, &str)]) -> String {
    let mut out = String::with_capacity(template.len());
    let mut rest = template;
    'scan: while let Some(start) = rest.find('{') {
        for (key, value) in values {
            let end = start + 1 + key.len();
            if rest.len() > end
                && rest[start + 1..].starts_with(key)
                && rest.as_bytes()[end] == b'}'
            {
                out.push_str(&rest[..start]);
                out.push_str(value);
                rest = &rest[end + 1..];
                continue 'scan;
            }
        }
        out.push_str(&rest[..=start]);
        rest = &rest[start + 1..];
    }
    out.push_str(rest);
    out
}

/// Extracts program text from a model response: the bodies of all fenced
/// code blocks concatenated, or the whole trimmed response when there is no
/// fence. Applying it twice gives the same result as applying it once.
pub fn extract_code(response: &str) -> String {
    let mut blocks: Vec<String> = Vec::new();
    let mut current: Option<Vec<&str>> = None;
    for line in response.lines() {
        if line.trim_start().starts_with("```") {
            match current.take() {
                Some(body) => blocks.push(body.join("\n")),
                None => current = Some(Vec::new()),
            }
            continue;
        }
        if let Some(body) = &mut current {
            body.push(line);
        }
    }
    // An unterminated fence runs to the end of the response.
    if let Some(body) = current {
        blocks.push(body.join("\n"));
    }
    if blocks.is_empty() {
        response.trim().to_string()
    } else {
        blocks.join("\n").trim().to_string()
    }
}

/// Sampling parameters sent with each request. `None` omits the field, which
/// is how parameters a model rejects get dropped.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct SamplingParams {
    pub temperature: Option<f64>,
    pub top_p: Option<f64>,
    pub n: Option<u32>,
    pub presence_penalty: Option<f64>,
    pub frequency_penalty: Option<f64>,
}

impl Default for SamplingParams {
    fn default() -> Self {
        SamplingParams {
            temperature: Some(1.0),
            top_p: Some(1.0),
            n: Some(1),
            presence_penalty: Some(0.0),
            frequency_penalty: Some(0.0),
        }
    }
}

impl SamplingParams {
    /// Field names in the order they are matched against rejection messages.
    /// Longer names first so `n` never shadows another parameter.
    const NAMES: [&'static str; 5] =
        ["presence_penalty", "frequency_penalty", "temperature", "top_p", "n"];

    fn is_set(&self, name: &str) -> bool {
        match name {
            "temperature" => self.temperature.is_some(),
            "top_p" => self.top_p.is_some(),
            "n" => self.n.is_some(),
            "presence_penalty" => self.presence_penalty.is_some(),
            "frequency_penalty" => self.frequency_penalty.is_some(),
            _ => false,
        }
    }

    fn clear(&mut self, name: &str) {
        match name {
            "temperature" => self.temperature = None,
            "top_p" => self.top_p = None,
            "n" => self.n = None,
            "presence_penalty" => self.presence_penalty = None,
            "frequency_penalty" => self.frequency_penalty = None,
            _ => {}
        }
    }
}

/// Connection settings for a chat-completions endpoint.
#[derive(Clone, Debug)]
pub struct ClientConfig {
    /// API root, e.g. `https://api.openai.com/v1`; requests go to
    /// `{base_url}/chat/completions`.
    pub base_url: String,
    pub api_key: String,
    pub model: String,
    pub params: SamplingParams,
    /// Retries for transient failures (429, 5xx, transport), with
    /// exponentially growing delays starting at `retry_base_delay`.
    pub max_retries: u32,
    pub retry_base_delay: Duration,
    pub timeout: Duration,
}

impl ClientConfig {
    pub fn new(
        base_url: impl Into<String>,
        api_key: impl Into<String>,
        model: impl Into<String>,
    ) -> Self {
        ClientConfig {
            base_url: base_url.into(),
            api_key: api_key.into(),
            model: model.into(),
            params: SamplingParams::default(),
            max_retries: 3,
            retry_base_delay: Duration::from_millis(500),
            timeout: Duration::from_secs(180),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum LlmError {
    #[error("API key is empty (set CCX_API_KEY)")]
    MissingApiKey,
    #[error("configuration error: {0}")]
    Config(String),
    #[error("API error (status {status}): {message}")]
    Api { status: u16, message: String },
    #[error("transport error: {0}")]
    Transport(String),
    #[error("malformed API response: {0}")]
    Malformed(String),
}

/// Endpoint settings read from a TOML config file. Every field is optional;
/// the caller merges them with flags and environment variables.
#[derive(Clone, Default, PartialEq, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileSettings {
    pub base_url: Option<String>,
    pub model: Option<String>,
    pub api_key: Option<String>,
    pub max_retries: Option<u32>,
    pub retry_base_delay_ms: Option<u64>,
    pub timeout_secs: Option<u64>,
}

impl FileSettings {
    pub fn from_toml(text: &str) -> Result<FileSettings, LlmError> {
        toml::from_str(text).map_err(|e| LlmError::Config(e.to_string()))
    }

    /// Folds these settings into a client configuration (flags take
    /// precedence over the file; the file fills remaining gaps).
    pub fn apply(&self, config: &mut ClientConfig) {
        if config.base_url.is_empty() {
            if let Some(url) = &self.base_url {
                config.base_url = url.clone();
            }
        }
        if config.model.is_empty() {
            if let Some(model) = &self.model {
                config.model = model.clone();
            }
        }
        if config.api_key.is_empty() {
            if let Some(key) = &self.api_key {
                config.api_key = key.clone();
            }
        }
        if let Some(n) = self.max_retries {
            config.max_retries = n;
        }
        if let Some(ms) = self.retry_base_delay_ms {
            config.retry_base_delay = Duration::from_millis(ms);
        }
        if let Some(secs) = self.timeout_secs {
            config.timeout = Duration::from_secs(secs);
        }
    }
}

/// A successful generation.
#[derive(Clone, Debug, PartialEq)]
pub struct Completion {
    pub content: String,
    /// Parameters the endpoint rejected and the client dropped to get the
    /// request through, in drop order.
    pub dropped_params: Vec<String>,
}

/// Everything about one generation attempt, written to disk by callers
/// before the produced code is ever executed.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct GenerationRecord {
    /// What was generated: "policy" or "query".
    pub kind: String,
    /// Caller-chosen label, e.g. a trial id or query id.
    pub label: String,
    pub model: String,
    pub prompt: String,
    /// Raw response content; absent when the request failed.
    pub response: Option<String>,
    /// Code extracted from the response; absent when the request failed.
    pub code: Option<String>,
    pub dropped_params: Vec<String>,
    /// Error description when the request failed.
    pub error: Option<String>,
}

enum SendError {
    /// The endpoint rejected this parameter; drop it and try again.
    ParamRejected(String, u16, String),
    Transient(LlmError),
    Fatal(LlmError),
}

/// A minimal chat-completions client: one user message in, one completion
/// out, with retry and parameter-drop handling.
pub struct Client {
    config: ClientConfig,
    agent: ureq::Agent,
}

impl Client {
    pub fn new(config: ClientConfig) -> Result<Client, LlmError> {
        if config.api_key.is_empty() {
            return Err(LlmError::MissingApiKey);
        }
        let agent = ureq::Agent::config_builder()
            .http_status_as_error(false)
            .timeout_global(Some(config.timeout))
            .build()
            .new_agent();
        Ok(Client { config, agent })
    }

    pub fn model(&self) -> &str {
        &self.config.model
    }

    /// Sends the prompt as a single user message and returns the first
    /// choice's content.
    pub fn complete(&self, prompt: &str) -> Result<Completion, LlmError> {
        let mut params = self.config.params.clone();
        let mut dropped = Vec::new();
        let mut transient_attempts = 0;
        loop {
            match self.send_once(prompt, &params) {
                Ok(content) => {
                    return Ok(Completion { content, dropped_params: dropped });
                }
                Err(SendError::ParamRejected(name, status, message)) => {
                    if params.is_set(&name) {
                        params.clear(&name);
                        dropped.push(name);
                    } else {
                        // Already dropped and still rejected: a real error.
                        return Err(LlmError::Api { status, message });
                    }
                }
                Err(SendError::Fatal(e)) => return Err(e),
                Err(SendError::Transient(e)) => {
                    if transient_attempts >= self.config.max_retries {
                        return Err(e);
                    }
                    let delay = self.config.retry_base_delay * 2u32.pow(transient_attempts);
                    std::thread::sleep(delay);
                    transient_attempts += 1;
                }
            }
        }
    }

    fn request_body(&self, prompt: &str, params: &SamplingParams) -> serde_json::Value {
        let mut body = serde_json::json!({
            "model": self.config.model,
            "messages": [{"role": "user", "content": prompt}],
        });
        let obj = body.as_object_mut().expect("body is an object");
        if let Some(v) = params.temperature {
            obj.insert("temperature".into(), v.into());
        }
        if let Some(v) = params.top_p {
            obj.insert("top_p".into(), v.into());
        }
        if let Some(v) = params.n {
            obj.insert("n".into(), v.into());
        }
        if let Some(v) = params.presence_penalty {
            obj.insert("presence_penalty".into(), v.into());
        }
        if let Some(v) = params.frequency_penalty {
            obj.insert("frequency_penalty".into(), v.into());
        }
        body
    }

    fn send_once(&self, prompt: &str, params: &SamplingParams) -> Result<String, SendError> {
        let url = format!("{}/chat/completions", self.config.base_url.trim_end_matches('/'));
        let body = self.request_body(prompt, params);
        let result = self
            .agent
            .post(&url)
            .header("Authorization", &format!("Bearer {}", self.config.api_key))
            .send_json(&body);
        let mut response = match result {
            Ok(r) => r,
            Err(e) => return Err(SendError::Transient(LlmError::Transport(e.to_string()))),
        };
        let status = response.status().as_u16();
        let text = response
            .body_mut()
            .read_to_string()
            .map_err(|e| SendError::Transient(LlmError::Transport(e.to_string())))?;
        if (200..300).contains(&status) {
            return extract_content(&text).map_err(SendError::Fatal);
        }
        let message = error_message(&text);
        if status == 400 {
            if let Some(name) = rejected_param(&message, params) {
                return Err(SendError::ParamRejected(name, status, message));
            }
        }
        let err = LlmError::Api { status, message };
        if status == 429 || status >= 500 {
            Err(SendError::Transient(err))
        } else {
            Err(SendError::Fatal(err))
        }
    }
}

/// Pulls `choices[0].message.content` out of a completion response.
fn extract_content(text: &str) -> Result<String, LlmError> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| LlmError::Malformed(format!("not JSON: {e}")))?;
    value
        .pointer("/choices/0/message/content")
        .and_then(|c| c.as_str())
        .map(str::to_string)
        .ok_or_else(|| {
            LlmError::Malformed("no choices[0].message.content in response".to_string())
        })
}

/// Best-effort extraction of `error.message` from an error response body.
fn error_message(text: &str) -> String {
    serde_json::from_str::<serde_json::Value>(text)
        .ok()
        .and_then(|v| {
            v.pointer("/error/message")
                .and_then(|m| m.as_str())
                .map(str::to_string)
        })
        .unwrap_or_else(|| text.trim().to_string())
}

/// Finds which still-set sampling parameter a 400 message complains about.
/// Matches whole words only, so the one-letter parameter `n` does not match
/// inside ordinary words.
fn rejected_param(message: &str, params: &SamplingParams) -> Option<String> {
    for name in SamplingParams::NAMES {
        if params.is_set(name) && contains_word(message, name) {
            return Some(name.to_string());
        }
    }
    None
}

fn contains_word(text: &str, word: &str) -> bool {
    let bytes = text.as_bytes();
    let is_word = |b: u8| b.is_ascii_alphanumeric() || b == b'_';
    let mut start = 0;
    while let Some(pos) = text[start..].find(word) {
        let at = start + pos;
        let before_ok = at == 0 || !is_word(bytes[at - 1]);
        let after = at + word.len();
        let after_ok = after >= bytes.len() || !is_word(bytes[after]);
        if before_ok && after_ok {
            return true;
        }
        start = at + 1;
    }
    false
}
