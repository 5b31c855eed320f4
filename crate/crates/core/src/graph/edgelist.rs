use super::{Graph, GraphError};

/// Parses `n` on the first line followed by one `u v` pair per line.
///
/// Blank lines and lines starting with `#` are ignored. Repeated edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    parse_record(text.lines().enumerate().map(|(i, l)| (i + 1, l)))
}

/// Parses a file holding several edge-list records separated by blank lines.
/// Each item carries the 1-based line number where its record starts.
pub fn parse_edge_list_corpus(text: &str) -> Vec<(usize, Result<Graph, GraphError>)> {
    let mut records = Vec::new();
    let mut current: Vec<(usize, &str)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.starts_with('#') {
            continue;
        }
        if trimmed.is_empty() {
            if !current.is_empty() {
                records.push(std::mem::take(&mut current));
            }
        } else {
            current.push((i + 1, line));
        }
    }
    if !current.is_empty() {
        records.push(current);
    }
    records
        .into_iter()
        .map(|lines| (lines[0].0, parse_record(lines.into_iter())))
        .collect()
}

fn parse_record<'a>(lines: impl Iterator<Item = (usize, &'a str)>) -> Result<Graph, GraphError> {
    let mut lines = lines.filter(|(_, l)| {
        let t = l.trim();
        !t.is_empty() && !t.starts_with('#')
    });
    let (first_line, header) = lines.next().ok_or(GraphError::EdgeList { line: 1, reason: "missing vertex count".into() })?;
    let n = parse_index(header.trim(), first_line)?;
    if n == 0 {
        return Err(GraphError::Empty);
    }
    let mut edges = Vec::new();
    for (line, text) in lines {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let [u, v] = tokens[..] else {
            return Err(GraphError::EdgeList { line, reason: format!("expected two vertex indices, found {}", tokens.len()) });
        };
        let (u, v) = (parse_index(u, line)?, parse_index(v, line)?);
        if u >= n || v >= n {
            return Err(GraphError::EdgeList { line, reason: format!("vertex {} out of range 0..{n}", u.max(v)) });
        }
        if u == v {
            return Err(GraphError::EdgeList { line, reason: format!("self-loop at vertex {u}") });
        }
        edges.push((u, v));
    }
    Graph::new(n, edges)
}

fn parse_index(token: &str, line: usize) -> Result<usize, GraphError> {
    token
        .parse()
        .map_err(|_| GraphError::EdgeList { line, reason: format!("not a non-negative integer: {token:?}") })
}
