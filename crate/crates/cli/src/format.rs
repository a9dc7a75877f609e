//! Graph files, degree-sequence files and the JSON swap-sequence format.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use swapdist_core::{
    BipartiteDegreeSequence, ChordGraph, DegreeSequence, DirectedDegreeSequence, Flavor, GraphKind,
    Move, Swap, SwapSequence,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl ParseError {
    fn at(tok: &Token<'_>, msg: impl Into<String>) -> Self {
        ParseError {
            line: tok.line,
            col: tok.col,
            msg: msg.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    col: usize,
}

impl Token<'_> {
    fn number(&self) -> Result<usize, ParseError> {
        self.text
            .parse()
            .map_err(|_| ParseError::at(self, format!("expected a non-negative integer, found `{}`", self.text)))
    }
}

/// Tokens of each non-blank line, with `#` comments removed. `/` is always a
/// token of its own. Columns are 1-based and count characters.
fn lines(text: &str) -> Vec<Vec<Token<'_>>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let tok = |s: usize, e: usize| Token {
            text: &body[s..e],
            line: i + 1,
            col: body[..s].chars().count() + 1,
        };
        let mut toks = Vec::new();
        let mut start: Option<usize> = None;
        for (b, ch) in body.char_indices() {
            if ch.is_whitespace() || ch == '/' {
                if let Some(s) = start.take() {
                    toks.push(tok(s, b));
                }
                if ch == '/' {
                    toks.push(tok(b, b + 1));
                }
            } else if start.is_none() {
                start = Some(b);
            }
        }
        if let Some(s) = start {
            toks.push(tok(s, body.len()));
        }
        if !toks.is_empty() {
            out.push(toks);
        }
    }
    out
}

fn end_of_input(text: &str) -> ParseError {
    ParseError {
        line: text.lines().count().max(1),
        col: 1,
        msg: "unexpected end of input".into(),
    }
}

/// Reads a graph file: a header `u n`, `b k l` or `d n` followed by one edge
/// per line as two 0-based native indices.
pub fn parse_graph(text: &str) -> Result<ChordGraph, ParseError> {
    let lines = lines(text);
    let Some((header, body)) = lines.split_first() else {
        return Err(end_of_input(text));
    };
    let arity = |n: usize| {
        if header.len() != n + 1 {
            let tok = header.get(n + 1).unwrap_or(&header[0]);
            return Err(ParseError::at(tok, format!("header `{}` takes {n} size(s)", header[0].text)));
        }
        Ok(())
    };
    let flavor = match header[0].text {
        "u" => {
            arity(1)?;
            Flavor::Undirected { n: header[1].number()? }
        }
        "b" => {
            arity(2)?;
            Flavor::Bipartite {
                k: header[1].number()?,
                l: header[2].number()?,
            }
        }
        "d" => {
            arity(1)?;
            Flavor::Directed { n: header[1].number()? }
        }
        other => return Err(ParseError::at(&header[0], format!("unknown graph kind `{other}`, expected u, b or d"))),
    };
    let (first_size, second_size) = match flavor {
        Flavor::Undirected { n } | Flavor::Directed { n } => (n, n),
        Flavor::Bipartite { k, l } => (k, l),
    };
    let mut seen = BTreeSet::new();
    let mut edges = Vec::new();
    for line in body {
        if line.len() != 2 {
            let tok = line.get(2).unwrap_or(&line[0]);
            return Err(ParseError::at(tok, "expected exactly two vertex indices"));
        }
        let (x, y) = (line[0].number()?, line[1].number()?);
        if x >= first_size {
            return Err(ParseError::at(&line[0], format!("vertex {x} out of range 0..{first_size}")));
        }
        if y >= second_size {
            return Err(ParseError::at(&line[1], format!("vertex {y} out of range 0..{second_size}")));
        }
        let flat = flavor.from_native((x, y));
        if !flavor.is_chord(flat.0, flat.1) {
            return Err(ParseError::at(&line[0], format!("loop {x} {y} is not allowed")));
        }
        if !seen.insert(flat) {
            return Err(ParseError::at(&line[0], format!("duplicate edge {x} {y}")));
        }
        edges.push(flat);
    }
    ChordGraph::new(flavor, edges).map_err(|e| ParseError {
        line: 1,
        col: 1,
        msg: e.to_string(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sequence {
    Undirected(DegreeSequence),
    Bipartite(BipartiteDegreeSequence),
    Directed(DirectedDegreeSequence),
}

/// Reads whitespace-separated degrees; bipartite and directed sequences
/// separate their halves with a single `/`.
pub fn parse_sequence(text: &str, kind: GraphKind) -> Result<Sequence, ParseError> {
    let toks: Vec<Token<'_>> = lines(text).into_iter().flatten().collect();
    let mut halves: Vec<Vec<usize>> = vec![Vec::new()];
    let mut slash: Option<Token<'_>> = None;
    for tok in &toks {
        if tok.text == "/" {
            if kind == GraphKind::Undirected {
                return Err(ParseError::at(tok, "undirected sequences have no `/` separator"));
            }
            if slash.is_some() {
                return Err(ParseError::at(tok, "more than one `/` separator"));
            }
            slash = Some(*tok);
            halves.push(Vec::new());
        } else {
            halves.last_mut().unwrap().push(tok.number()?);
        }
    }
    match kind {
        GraphKind::Undirected => Ok(Sequence::Undirected(DegreeSequence::new(halves.remove(0)))),
        GraphKind::Bipartite | GraphKind::Directed => {
            let Some(sep) = slash else {
                return Err(toks.last().map_or_else(|| end_of_input(text), |t| ParseError::at(t, "missing `/` separator")));
            };
            let second = halves.pop().unwrap();
            let first = halves.pop().unwrap();
            if kind == GraphKind::Bipartite {
                return Ok(Sequence::Bipartite(BipartiteDegreeSequence::new(first, second)));
            }
            if first.len() != second.len() {
                return Err(ParseError::at(
                    &sep,
                    format!("out-degrees ({}) and in-degrees ({}) differ in length", first.len(), second.len()),
                ));
            }
            Ok(Sequence::Directed(DirectedDegreeSequence::new(first, second)))
        }
    }
}

// ---------------------------------------------------------------------------
// Swap-sequence JSON

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum MoveRecord {
    #[serde(rename = "c4")]
    C4 { remove: [[usize; 2]; 2], add: [[usize; 2]; 2] },
    #[serde(rename = "tri_c6")]
    TriC6 { triangle: [usize; 3] },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceRecord {
    pub kind: String,
    pub start_fingerprint: String,
    pub stop_fingerprint: String,
    pub moves: Vec<MoveRecord>,
    pub total_weight: usize,
}

/// Offset of the second class in flat coordinates.
fn second_offset(flavor: Flavor) -> usize {
    match flavor {
        Flavor::Undirected { .. } => 0,
        Flavor::Bipartite { k, .. } => k,
        Flavor::Directed { n } => n,
    }
}

pub fn move_record(m: &Move, flavor: Flavor) -> MoveRecord {
    match *m {
        Move::C4(s) => {
            let s = s.normalized(flavor);
            let off = second_offset(flavor);
            let (a, b, c, d) = (s.a, s.b, s.c - off, s.d - off);
            MoveRecord::C4 {
                remove: [[a, c], [b, d]],
                add: [[b, c], [a, d]],
            }
        }
        Move::TriangularC6 { triangle } => MoveRecord::TriC6 { triangle },
    }
}

pub fn sequence_record(seq: &SwapSequence) -> SequenceRecord {
    SequenceRecord {
        kind: seq.kind().code().to_string(),
        start_fingerprint: seq.start_fingerprint.clone(),
        stop_fingerprint: seq.stop_fingerprint.clone(),
        moves: seq.moves.iter().map(|m| move_record(m, seq.flavor)).collect(),
        total_weight: seq.total_weight(),
    }
}

pub fn kind_from_code(code: &str) -> Option<GraphKind> {
    match code {
        "u" => Some(GraphKind::Undirected),
        "b" => Some(GraphKind::Bipartite),
        "d" => Some(GraphKind::Directed),
        _ => None,
    }
}

/// Rebuilds the move list in flat coordinates of `flavor`. A `c4` record
/// whose `add` pairs do not follow from its `remove` pairs is rejected with
/// the index of the move.
pub fn sequence_from_record(rec: &SequenceRecord, flavor: Flavor) -> Result<SwapSequence, (usize, String)> {
    let off = second_offset(flavor);
    let moves = rec
        .moves
        .iter()
        .enumerate()
        .map(|(i, m)| match *m {
            MoveRecord::C4 { remove, add } => {
                let [[a, c], [b, d]] = remove;
                if add != [[b, c], [a, d]] {
                    return Err((i, "added pairs do not match the removed pairs".to_string()));
                }
                Ok(Move::C4(Swap { a, b, c: c + off, d: d + off }))
            }
            MoveRecord::TriC6 { triangle } => Ok(Move::TriangularC6 { triangle }),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SwapSequence {
        flavor,
        moves,
        start_fingerprint: rec.start_fingerprint.clone(),
        stop_fingerprint: rec.stop_fingerprint.clone(),
    })
}
