//! Line-oriented network files.
//!
//! ```text
//! # three-mode GHZ at r = 1
//! input squeeze p 1.0
//! input squeeze x 1.0
//! input squeeze x 1.0
//! bs 1 2 0.3333333
//! bs 2 3 0.5
//! loss 1 0.8
//! ```
//!
//! Mode indices are 1-based. `#` starts a comment. All `input` lines come
//! before the first `bs` or `loss`.

use std::fmt::{self, Write as _};
use std::path::Path;

use cvwl_core::{Element, Input, NetworkSpec, Orientation, SqueezeSpec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    /// 1-based line and column; absent for whole-file errors.
    pub location: Option<(usize, usize)>,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.location {
            Some((line, col)) => write!(f, "{line}:{col}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

struct Token<'a> {
    col: usize,
    text: &'a str,
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let code = line.split('#').next().unwrap_or("");
    let mut tokens = Vec::new();
    let mut start = None;
    for (i, c) in code.char_indices().chain(std::iter::once((code.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                tokens.push(Token { col: code[..s].chars().count() + 1, text: &code[s..i] });
                start = None;
            }
            _ => {}
        }
    }
    tokens
}

struct LineParser<'a> {
    line: usize,
    end_col: usize,
    tokens: Vec<Token<'a>>,
    next: usize,
}

impl<'a> LineParser<'a> {
    fn err<T>(&self, col: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { location: Some((self.line, col)), message: message.into() })
    }

    fn word(&mut self, what: &str) -> Result<(usize, &'a str), ParseError> {
        match self.tokens.get(self.next) {
            Some(t) => {
                self.next += 1;
                Ok((t.col, t.text))
            }
            None => self.err(self.end_col, format!("expected {what}")),
        }
    }

    fn number(&mut self, what: &str) -> Result<(usize, f64), ParseError> {
        let (col, text) = self.word(what)?;
        match text.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok((col, v)),
            _ => self.err(col, format!("expected {what}, found '{text}'")),
        }
    }

    fn unit(&mut self, what: &str) -> Result<f64, ParseError> {
        let (col, v) = self.number(what)?;
        if !(0.0..=1.0).contains(&v) {
            return self.err(col, format!("{what} {v} outside [0, 1]"));
        }
        Ok(v)
    }

    fn mode(&mut self, n_modes: usize) -> Result<usize, ParseError> {
        let (col, text) = self.word("mode index")?;
        match text.parse::<usize>() {
            Ok(m) if (1..=n_modes).contains(&m) => Ok(m - 1),
            Ok(m) => self.err(col, format!("mode {m} out of range 1..={n_modes}")),
            Err(_) => self.err(col, format!("expected mode index, found '{text}'")),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.tokens.get(self.next) {
            Some(t) => self.err(t.col, format!("unexpected '{}'", t.text)),
            None => Ok(()),
        }
    }
}

/// Parses network-file text into a validated spec.
pub fn parse_network(text: &str) -> Result<NetworkSpec<f64>, ParseError> {
    let mut inputs = Vec::new();
    let mut ops = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let tokens = tokenize(raw);
        if tokens.is_empty() {
            continue;
        }
        let end_col = raw.split('#').next().unwrap_or("").chars().count() + 1;
        let mut p = LineParser { line: idx + 1, end_col, tokens, next: 0 };
        let (head_col, head_text) = p.word("directive")?;
        match head_text {
            "input" => {
                if !ops.is_empty() {
                    return p.err(head_col, "input after the first bs/loss directive");
                }
                let (kind_col, kind_text) = p.word("'squeeze' or 'vacuum'")?;
                match kind_text {
                    "vacuum" => inputs.push(Input::Vacuum),
                    "squeeze" => {
                        let (o_col, o_text) = p.word("orientation 'x' or 'p'")?;
                        let orientation = match o_text {
                            "x" => Orientation::SqueezeX,
                            "p" => Orientation::SqueezeP,
                            other => return p.err(o_col, format!("expected orientation 'x' or 'p', found '{other}'")),
                        };
                        let (r_col, r) = p.number("squeeze parameter")?;
                        let spec = match SqueezeSpec::new(r, orientation) {
                            Ok(s) => s,
                            Err(_) => return p.err(r_col, format!("squeeze parameter {r} must be >= 0")),
                        };
                        inputs.push(Input::Squeezed(spec));
                    }
                    other => return p.err(kind_col, format!("expected 'squeeze' or 'vacuum', found '{other}'")),
                }
            }
            "bs" => {
                let n = inputs.len();
                let i = p.mode(n)?;
                let j_col = p.tokens.get(p.next).map_or(p.end_col, |t| t.col);
                let j = p.mode(n)?;
                if i == j {
                    return p.err(j_col, "beam splitter needs two distinct modes");
                }
                let reflectivity = p.unit("reflectivity")?;
                ops.push(Element::BeamSplitter { i, j, reflectivity });
            }
            "loss" => {
                let mode = p.mode(inputs.len())?;
                let eta = p.unit("efficiency")?;
                ops.push(Element::Loss { mode, eta });
            }
            other => return p.err(head_col, format!("unknown directive '{other}'")),
        }
        p.finish()?;
    }
    if inputs.is_empty() {
        return Err(ParseError { location: None, message: "no inputs".into() });
    }
    NetworkSpec::new(inputs, ops).map_err(|e| ParseError { location: None, message: e.to_string() })
}

/// Reads and parses a network file.
pub fn read_network(path: &Path) -> Result<NetworkSpec<f64>, ParseError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| ParseError { location: None, message: format!("{}: {e}", path.display()) })?;
    parse_network(&text)
}

/// Serialises a network; `parse_network` reads it back exactly.
pub fn write_network(spec: &NetworkSpec<f64>) -> String {
    let mut out = String::new();
    for input in &spec.inputs {
        match input {
            Input::Vacuum => out.push_str("input vacuum\n"),
            Input::Squeezed(s) => {
                let o = match s.orientation {
                    Orientation::SqueezeX => "x",
                    Orientation::SqueezeP => "p",
                };
                let _ = writeln!(out, "input squeeze {o} {:?}", s.r);
            }
        }
    }
    for op in &spec.ops {
        let _ = match *op {
            Element::BeamSplitter { i, j, reflectivity } => writeln!(out, "bs {} {} {reflectivity:?}", i + 1, j + 1),
            Element::Loss { mode, eta } => writeln!(out, "loss {} {eta:?}", mode + 1),
        };
    }
    out
}
