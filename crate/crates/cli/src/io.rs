//! Text formats for graphs, hypergraphs and colourings.
//!
//! Graph: a header line `n m`, then `m` lines `u v` with `u < v` (0-indexed).
//! Hypergraph: a header line `h N m`, then `m` lines of `h` ascending vertex
//! indices. Colouring: a header line `c N`, then `N` lines with one colour in
//! `1..=c` each. Lines are newline-terminated ASCII without trailing
//! whitespace; blank lines and `#` comments are rejected so files stay
//! canonical.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use girthram_core::{Colouring, Graph, UniformHypergraph};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

fn parse_err(line: usize, msg: impl Into<String>) -> IoError {
    IoError::Parse { line, msg: msg.into() }
}

/// Splits `text` into numbered lines and parses each into `width` integers.
fn numbered_rows<'a>(
    text: &'a str,
) -> impl Iterator<Item = (usize, &'a str)> + 'a {
    text.lines().enumerate().map(|(i, l)| (i + 1, l))
}

fn parse_row(line: usize, raw: &str, width: usize) -> Result<Vec<u64>, IoError> {
    if raw != raw.trim_end() {
        return Err(parse_err(line, "trailing whitespace"));
    }
    let fields: Vec<&str> = raw.split_ascii_whitespace().collect();
    if fields.len() != width {
        return Err(parse_err(line, format!("expected {width} fields, found {}", fields.len())));
    }
    fields
        .iter()
        .map(|f| f.parse::<u64>().map_err(|_| parse_err(line, format!("not a non-negative integer: {f:?}"))))
        .collect()
}

fn header<'a>(
    rows: &mut impl Iterator<Item = (usize, &'a str)>,
    width: usize,
    shape: &str,
) -> Result<Vec<u64>, IoError> {
    match rows.next() {
        Some((line, raw)) => parse_row(line, raw, width),
        None => Err(parse_err(1, format!("missing header line \"{shape}\""))),
    }
}

fn no_extra_lines<'a>(rows: &mut impl Iterator<Item = (usize, &'a str)>, declared: u64) -> Result<(), IoError> {
    match rows.next() {
        Some((line, _)) => Err(parse_err(line, format!("more lines than the {declared} declared in the header"))),
        None => Ok(()),
    }
}

fn to_usize(line: usize, v: u64) -> Result<usize, IoError> {
    usize::try_from(v).map_err(|_| parse_err(line, "value too large"))
}

pub fn parse_graph(text: &str) -> Result<Graph, IoError> {
    let mut rows = numbered_rows(text);
    let hd = header(&mut rows, 2, "n m")?;
    let n = to_usize(1, hd[0])?;
    let m = hd[1];
    let mut pairs = Vec::new();
    for i in 0..m {
        let (line, raw) = rows
            .next()
            .ok_or_else(|| parse_err(i as usize + 2, format!("header declares {m} edges, found {i}")))?;
        let row = parse_row(line, raw, 2)?;
        let (u, v) = (to_usize(line, row[0])?, to_usize(line, row[1])?);
        if u >= v {
            return Err(parse_err(line, format!("edge {u} {v} is not an ascending pair")));
        }
        if v >= n {
            return Err(parse_err(line, format!("vertex {v} out of range for n = {n}")));
        }
        pairs.push((u, v));
    }
    no_extra_lines(&mut rows, m)?;
    let g = Graph::from_edges(n, &pairs).map_err(|e| parse_err(1, e.to_string()))?;
    if g.edge_count() != pairs.len() {
        return Err(parse_err(1, "duplicate edges"));
    }
    Ok(g)
}

pub fn format_graph(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn parse_hypergraph(text: &str) -> Result<UniformHypergraph, IoError> {
    let mut rows = numbered_rows(text);
    let hd = header(&mut rows, 3, "h N m")?;
    let h = to_usize(1, hd[0])?;
    let n = to_usize(1, hd[1])?;
    let m = hd[2];
    if h == 0 {
        return Err(parse_err(1, "uniformity must be at least 1"));
    }
    let mut edges = Vec::new();
    for i in 0..m {
        let (line, raw) = rows
            .next()
            .ok_or_else(|| parse_err(i as usize + 2, format!("header declares {m} edges, found {i}")))?;
        let row = parse_row(line, raw, h)?;
        let e: Vec<usize> = row.iter().map(|&v| to_usize(line, v)).collect::<Result<_, _>>()?;
        if e.windows(2).any(|w| w[0] >= w[1]) {
            return Err(parse_err(line, "vertices must be strictly ascending"));
        }
        if let Some(&v) = e.last().filter(|&&v| v >= n) {
            return Err(parse_err(line, format!("vertex {v} out of range for N = {n}")));
        }
        edges.push(e);
    }
    no_extra_lines(&mut rows, m)?;
    let hg = UniformHypergraph::new(h, n, edges).map_err(|e| parse_err(1, e.to_string()))?;
    if hg.edge_count() as u64 != m {
        return Err(parse_err(1, "duplicate hyperedges"));
    }
    Ok(hg)
}

pub fn format_hypergraph(hg: &UniformHypergraph) -> String {
    let mut s = format!("{} {} {}\n", hg.uniformity(), hg.num_vertices(), hg.edge_count());
    for e in hg.edges() {
        let row: Vec<String> = e.iter().map(usize::to_string).collect();
        let _ = writeln!(s, "{}", row.join(" "));
    }
    s
}

pub fn parse_colouring(text: &str) -> Result<Colouring, IoError> {
    let mut rows = numbered_rows(text);
    let hd = header(&mut rows, 2, "c N")?;
    let c = u32::try_from(hd[0]).map_err(|_| parse_err(1, "too many colours"))?;
    let n = hd[1];
    let mut colours = Vec::new();
    for i in 0..n {
        let (line, raw) = rows
            .next()
            .ok_or_else(|| parse_err(i as usize + 2, format!("header declares {n} vertices, found {i}")))?;
        let v = parse_row(line, raw, 1)?[0];
        if v == 0 || v > c as u64 {
            return Err(parse_err(line, format!("colour {v} outside 1..={c}")));
        }
        colours.push(v as u32);
    }
    no_extra_lines(&mut rows, n)?;
    Colouring::new(c, colours).map_err(|e| parse_err(1, e.to_string()))
}

pub fn format_colouring(c: &Colouring) -> String {
    let mut s = format!("{} {}\n", c.num_colours, c.len());
    for &col in &c.colours {
        let _ = writeln!(s, "{col}");
    }
    s
}

fn read(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::File { path: path.to_path_buf(), source })
}

pub fn write_text(path: &Path, text: &str) -> Result<(), IoError> {
    fs::write(path, text).map_err(|source| IoError::File { path: path.to_path_buf(), source })
}

pub fn read_graph(path: &Path) -> Result<Graph, IoError> {
    parse_graph(&read(path)?)
}

pub fn write_graph(g: &Graph, path: &Path) -> Result<(), IoError> {
    write_text(path, &format_graph(g))
}

pub fn read_hypergraph(path: &Path) -> Result<UniformHypergraph, IoError> {
    parse_hypergraph(&read(path)?)
}

pub fn write_hypergraph(hg: &UniformHypergraph, path: &Path) -> Result<(), IoError> {
    write_text(path, &format_hypergraph(hg))
}

pub fn read_colouring(path: &Path) -> Result<Colouring, IoError> {
    parse_colouring(&read(path)?)
}

pub fn write_colouring(c: &Colouring, path: &Path) -> Result<(), IoError> {
    write_text(path, &format_colouring(c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let g = Graph::complete(5);
        let text = format_graph(&g);
        assert!(text.starts_with("5 10\n0 1\n"));
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn graph_errors_carry_line_numbers() {
        match parse_graph("3 2\n0 1\n") {
            Err(IoError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        match parse_graph("3 1\n0 1\n1 2\n") {
            Err(IoError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        match parse_graph("3 1\n1 x\n") {
            Err(IoError::Parse { line, msg }) => assert_eq!((line, msg.contains("\"x\"")), (2, true)),
            other => panic!("{other:?}"),
        }
        assert!(parse_graph("3 1\n1 0\n").is_err());
        assert!(parse_graph("3 1\n0 3\n").is_err());
        assert!(parse_graph("3 1\n0 1 \n").is_err());
        assert!(parse_graph("3 2\n0 1\n0 1\n").is_err());
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn hypergraph_round_trip() {
        let hg = UniformHypergraph::new(3, 6, vec![vec![0, 1, 2], vec![2, 3, 4], vec![0, 4, 5]]).unwrap();
        let text = format_hypergraph(&hg);
        assert_eq!(text, "3 6 3\n0 1 2\n0 4 5\n2 3 4\n");
        assert_eq!(parse_hypergraph(&text).unwrap(), hg);
        assert!(parse_hypergraph("3 6 1\n2 1 0\n").is_err());
        assert!(parse_hypergraph("3 6 1\n0 1\n").is_err());
    }

    #[test]
    fn colouring_round_trip() {
        let c = Colouring::new(3, vec![1, 3, 2, 2]).unwrap();
        assert_eq!(parse_colouring(&format_colouring(&c)).unwrap(), c);
        match parse_colouring("2 2\n1\n3\n") {
            Err(IoError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }
}
