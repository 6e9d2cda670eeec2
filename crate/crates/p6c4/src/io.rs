//! Edge-list and graph6 readers and writers.

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("graph6: {0}")]
    Graph6(String),
}

fn line_err(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Line { line, msg: msg.into() }
}

/// Parse "n m" followed by m lines "u v". Blank lines and lines starting with
/// '#' are skipped; line numbers in errors are 1-based.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| line_err(1, "missing \"n m\" header"))?;
    let nums = parse_pair(hline, header)?;
    let (n, m) = nums;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = hline;
    for (lno, l) in lines {
        last_line = lno;
        if edges.len() == m {
            return Err(line_err(lno, format!("more than the declared {m} edges")));
        }
        let (u, v) = parse_pair(lno, l)?;
        if u >= n || v >= n {
            return Err(line_err(lno, format!("endpoint out of range 0..{n}")));
        }
        if u == v {
            return Err(line_err(lno, format!("self-loop on {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(line_err(last_line, format!("expected {m} edges, found {}", edges.len())));
    }
    Graph::new(n, &edges).map_err(|e| line_err(hline, e.to_string()))
}

fn parse_pair(lno: usize, l: &str) -> Result<(usize, usize), ParseError> {
    let mut it = l.split_whitespace();
    let a = it.next().ok_or_else(|| line_err(lno, "expected two integers"))?;
    let b = it.next().ok_or_else(|| line_err(lno, "expected two integers"))?;
    if it.next().is_some() {
        return Err(line_err(lno, "expected exactly two integers"));
    }
    let a = a.parse().map_err(|_| line_err(lno, format!("not a non-negative integer: {a:?}")))?;
    let b = b.parse().map_err(|_| line_err(lno, format!("not a non-negative integer: {b:?}")))?;
    Ok((a, b))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ascii")
}

pub fn parse_graph6(line: &str) -> Result<Graph, ParseError> {
    let line = line.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(ParseError::Graph6(format!("byte {b} outside 63..=126")));
    }
    let val = |b: u8| (b - 63) as usize;
    let (n, rest) = match bytes {
        [] => return Err(ParseError::Graph6("empty input".into())),
        [126, 126, r @ ..] => {
            if r.len() < 6 {
                return Err(ParseError::Graph6("truncated size field".into()));
            }
            (r[..6].iter().fold(0, |a, &b| (a << 6) | val(b)), &r[6..])
        }
        [126, r @ ..] => {
            if r.len() < 3 {
                return Err(ParseError::Graph6("truncated size field".into()));
            }
            (r[..3].iter().fold(0, |a, &b| (a << 6) | val(b)), &r[3..])
        }
        [b, r @ ..] => (val(*b), r),
    };
    let need = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if rest.len() != need {
        return Err(ParseError::Graph6(format!(
            "expected {need} adjacency bytes for n={n}, found {}",
            rest.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let bit = (val(rest[k / 6]) >> (5 - k % 6)) & 1;
            if bit == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges).map_err(|e| ParseError::Graph6(e.to_string()))
}

/// One graph per non-empty line.
pub fn parse_graph6_all(text: &str) -> Result<Vec<Graph>, ParseError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l).map_err(|e| match e {
                ParseError::Graph6(m) => line_err(i + 1, m),
                other => other,
            })
        })
        .collect()
}
