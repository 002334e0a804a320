//! A tiny scripted HTTP server for exercising the generation client without
//! a network. Each incoming request pops the next scripted response; once
//! the script runs out, the server answers 500. Requests are recorded so
//! tests can assert on paths, headers, and bodies.

use std::io::{BufRead, BufReader, Read, Write};
use std::net::{SocketAddr, TcpListener, TcpStream};
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::{Arc, Mutex};
use std::thread::JoinHandle;

/// One canned response: an HTTP status and a JSON body.
#[derive(Clone, Debug)]
pub struct ScriptedResponse {
    pub status: u16,
    pub body: serde_json::Value,
}

/// A successful chat-completion response carrying `content`.
pub fn chat_completion(content: &str) -> ScriptedResponse {
    ScriptedResponse {
        status: 200,
        body: serde_json::json!({
            "choices": [{"message": {"role": "assistant", "content": content}}]
        }),
    }
}

/// An error response in the usual `{"error": {"message": ...}}` shape.
pub fn api_error(status: u16, message: &str) -> ScriptedResponse {
    ScriptedResponse {
        status,
        body: serde_json::json!({"error": {"message": message, "type": "invalid_request_error"}}),
    }
}

/// What the server saw for one request.
#[derive(Clone, Debug)]
pub struct RecordedRequest {
    pub method: String,
    pub path: String,
    pub authorization: Option<String>,
    pub body: serde_json::Value,
}

pub struct MockServer {
    addr: SocketAddr,
    requests: Arc<Mutex<Vec<RecordedRequest>>>,
    alive: Arc<AtomicBool>,
    handle: Option<JoinHandle<()>>,
}

impl MockServer {
    /// Binds a local port and serves `script` in order, one response per
    /// request.
    pub fn start(script: Vec<ScriptedResponse>) -> std::io::Result<MockServer> {
        let listener = TcpListener::bind("127.0.0.1:0")?;
        let addr = listener.local_addr()?;
        let requests: Arc<Mutex<Vec<RecordedRequest>>> = Arc::new(Mutex::new(Vec::new()));
        let alive = Arc::new(AtomicBool::new(true));
        let script = Arc::new(Mutex::new(std::collections::VecDeque::from(script)));

        let thread_requests = requests.clone();
        let thread_alive = alive.clone();
        let handle = std::thread::spawn(move || {
            for stream in listener.incoming() {
                if !thread_alive.load(Ordering::SeqCst) {
                    break;
                }
                let Ok(stream) = stream else { break };
                let response = {
                    let mut script = script.lock().unwrap();
                    script.pop_front().unwrap_or_else(|| {
                        api_error(500, "mock server script exhausted")
                    })
                };
                // A request that fails to parse (e.g. the wake-up connection
                // made on drop) is not recorded or answered.
                if let Some(request) = read_request(&stream) {
                    thread_requests.lock().unwrap().push(request);
                    let _ = write_response(&stream, &response);
                } else {
                    script.lock().unwrap().push_front(response);
                }
            }
        });

        Ok(MockServer { addr, requests, alive, handle: Some(handle) })
    }

    /// Base URL ending in `/v1`, matching how real endpoints are configured.
    pub fn base_url(&self) -> String {
        format!("http://{}/v1", self.addr)
    }

    pub fn requests(&self) -> Vec<RecordedRequest> {
        self.requests.lock().unwrap().clone()
    }

    pub fn request_count(&self) -> usize {
        self.requests.lock().unwrap().len()
    }
}

impl Drop for MockServer {
    fn drop(&mut self) {
        self.alive.store(false, Ordering::SeqCst);
        // Unblock the accept loop so the thread can observe the flag.
        let _ = TcpStream::connect(self.addr);
        if let Some(handle) = self.handle.take() {
            let _ = handle.join();
        }
    }
}

fn read_request(stream: &TcpStream) -> Option<RecordedRequest> {
    let mut reader = BufReader::new(stream);
    let mut request_line = String::new();
    reader.read_line(&mut request_line).ok()?;
    let mut parts = request_line.split_whitespace();
    let method = parts.next()?.to_string();
    let path = parts.next()?.to_string();

    let mut authorization = None;
    let mut content_length = 0usize;
    loop {
        let mut line = String::new();
        reader.read_line(&mut line).ok()?;
        let line = line.trim_end();
        if line.is_empty() {
            break;
        }
        let (name, value) = line.split_once(':')?;
        let value = value.trim();
        match name.to_ascii_lowercase().as_str() {
            "authorization" => authorization = Some(value.to_string()),
            "content-length" => content_length = value.parse().ok()?,
            _ => {}
        }
    }

    let mut body_bytes = vec![0u8; content_length];
    if content_length > 0 {
        reader.read_exact(&mut body_bytes).ok()?;
    }
    let body = serde_json::from_slice(&body_bytes).unwrap_or(serde_json::Value::Null);
    Some(RecordedRequest { method, path, authorization, body })
}

fn write_response(mut stream: &TcpStream, response: &ScriptedResponse) -> std::io::Result<()> {
    let body = response.body.to_string();
    let reason = match response.status {
        200 => "OK",
        400 => "Bad Request",
        401 => "Unauthorized",
        403 => "Forbidden",
        429 => "Too Many Requests",
        500 => "Internal Server Error",
        503 => "Service Unavailable",
        _ => "Status",
    };
    write!(
        stream,
        "HTTP/1.1 {} {}\r\nContent-Type: application/json\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{}",
        response.status,
        reason,
        body.len(),
        body
    )?;
    stream.flush()
}
