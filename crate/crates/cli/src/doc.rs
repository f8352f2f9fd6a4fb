//! The `.gps` text format: a line-oriented description of an ordered
//! Γ-semigroup with named elements and operations.
//!
//! ```text
//! gamma-structure v1
//! elements: a b
//! gammas: g m
//! table g:
//! a b
//! b a
//! table m:
//! b a
//! a b
//! order:
//! a <= b
//! ```
//!
//! `#` starts a comment anywhere on a line, blank lines are ignored, and
//! tokens are whitespace-separated. Reflexive order pairs may be listed
//! but never need to be; every non-reflexive pair must be written out
//! explicitly, and the listed pairs must already be transitively closed —
//! a missing consequence is a parse error that names the triple.

use std::fmt::{self, Write as _};

use gsg_core::structure::{GammaStructure, OrderRelation, OrderedGammaStructure};

/// A parsed `.gps` document: names plus the purely numeric content.
///
/// Element and operation names are kept so reports can speak the user's
/// vocabulary; tables and order pairs are stored as indices into the name
/// lists. Order pairs are normalized — strict only, sorted, deduplicated —
/// so two documents describing the same structure compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureDocument {
    elements: Vec<String>,
    gammas: Vec<String>,
    tables: Vec<Vec<usize>>,
    order_pairs: Vec<(usize, usize)>,
}

/// A diagnostic produced while reading a document, with a 1-based line and
/// column when the problem has a single location.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: Option<(usize, usize)>,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.position {
            Some((line, col)) => write!(f, "line {line}:{col}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, col: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        position: Some((line, col)),
        message: message.into(),
    })
}

fn err_global<T>(message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        position: None,
        message: message.into(),
    })
}

/// Splits one raw line into `(column, token)` pairs, dropping comments.
fn tokenize(raw: &str) -> Vec<(usize, &str)> {
    let line = match raw.find('#') {
        Some(hash) => &raw[..hash],
        None => raw,
    };
    let mut tokens = Vec::new();
    let mut start: Option<usize> = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                tokens.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        tokens.push((s + 1, &line[s..]));
    }
    tokens
}

fn check_name(line: usize, col: usize, token: &str, role: &str) -> Result<(), ParseError> {
    if token == "<=" || token.contains(':') {
        return err(line, col, format!("`{token}` cannot be used as an {role} name"));
    }
    Ok(())
}

type TokenLine<'a> = (usize, Vec<(usize, &'a str)>);

fn parse_name_list(
    lines: &[TokenLine<'_>],
    cursor: usize,
    keyword: &str,
    role: &str,
) -> Result<Vec<String>, ParseError> {
    let Some((line, tokens)) = lines.get(cursor) else {
        return err_global(format!("missing `{keyword}` line"));
    };
    let (col, head) = tokens[0];
    if head != keyword {
        return err(*line, col, format!("expected `{keyword}`, found `{head}`"));
    }
    if tokens.len() == 1 {
        return err(*line, col, format!("`{keyword}` needs at least one name"));
    }
    let mut names: Vec<String> = Vec::with_capacity(tokens.len() - 1);
    for &(col, token) in &tokens[1..] {
        check_name(*line, col, token, role)?;
        if names.iter().any(|seen| seen == token) {
            return err(*line, col, format!("duplicate {role} name `{token}`"));
        }
        names.push(token.to_owned());
    }
    Ok(names)
}

impl StructureDocument {
    /// Reads a document, reporting the first problem with its location.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let lines: Vec<TokenLine<'_>> = text
            .lines()
            .enumerate()
            .map(|(i, raw)| (i + 1, tokenize(raw)))
            .filter(|(_, tokens)| !tokens.is_empty())
            .collect();

        let Some((line, tokens)) = lines.first() else {
            return err_global("empty document; expected `gamma-structure v1`");
        };
        if tokens.len() != 2 || tokens[0].1 != "gamma-structure" || tokens[1].1 != "v1" {
            return err(*line, tokens[0].0, "expected `gamma-structure v1` header");
        }

        let elements = parse_name_list(&lines, 1, "elements:", "element")?;
        let gammas = parse_name_list(&lines, 2, "gammas:", "operation")?;
        let n = elements.len();

        let resolve_element = |line: usize, col: usize, token: &str| -> Result<usize, ParseError> {
            match elements.iter().position(|e| e == token) {
                Some(i) => Ok(i),
                None => err(line, col, format!("unknown element `{token}`")),
            }
        };

        let mut tables: Vec<Option<Vec<usize>>> = vec![None; gammas.len()];
        let mut raw_pairs: Vec<(usize, usize, usize, usize)> = Vec::new();
        let mut saw_order = false;
        let mut cursor = 3;
        while cursor < lines.len() {
            let (line, tokens) = &lines[cursor];
            match tokens[0].1 {
                "table" => {
                    if tokens.len() != 2 {
                        return err(*line, tokens[0].0, "expected `table <operation>:`");
                    }
                    let (col, head) = tokens[1];
                    let Some(name) = head.strip_suffix(':') else {
                        return err(*line, col, format!("expected `:` after `{head}`"));
                    };
                    let Some(op) = gammas.iter().position(|g| g == name) else {
                        return err(*line, col, format!("unknown operation `{name}`"));
                    };
                    if tables[op].is_some() {
                        return err(*line, col, format!("duplicate table for operation `{name}`"));
                    }
                    cursor += 1;
                    let mut flat = Vec::with_capacity(n * n);
                    for row in 0..n {
                        let Some((row_line, row_tokens)) = lines.get(cursor) else {
                            return err_global(format!(
                                "table `{name}` has {row} of {n} rows"
                            ));
                        };
                        if row_tokens[0].1 == "table" || row_tokens[0].1 == "order:" {
                            return err(
                                *row_line,
                                row_tokens[0].0,
                                format!("table `{name}` has {row} of {n} rows"),
                            );
                        }
                        if row_tokens.len() != n {
                            return err(
                                *row_line,
                                row_tokens[0].0,
                                format!(
                                    "table `{name}` row has {} entries, expected {n}",
                                    row_tokens.len()
                                ),
                            );
                        }
                        for &(col, token) in row_tokens {
                            flat.push(resolve_element(*row_line, col, token)?);
                        }
                        cursor += 1;
                    }
                    tables[op] = Some(flat);
                }
                "order:" => {
                    if tokens.len() != 1 {
                        return err(*line, tokens[1].0, "order pairs go on their own lines");
                    }
                    if saw_order {
                        return err(*line, tokens[0].0, "duplicate order section");
                    }
                    saw_order = true;
                    cursor += 1;
                    while let Some((pair_line, pair_tokens)) = lines.get(cursor) {
                        if pair_tokens[0].1 == "table" || pair_tokens[0].1 == "order:" {
                            break;
                        }
                        if pair_tokens.len() != 3 || pair_tokens[1].1 != "<=" {
                            return err(
                                *pair_line,
                                pair_tokens[0].0,
                                "expected `<element> <= <element>`",
                            );
                        }
                        let x = resolve_element(*pair_line, pair_tokens[0].0, pair_tokens[0].1)?;
                        let y = resolve_element(*pair_line, pair_tokens[2].0, pair_tokens[2].1)?;
                        raw_pairs.push((x, y, *pair_line, pair_tokens[0].0));
                        cursor += 1;
                    }
                }
                other => {
                    return err(
                        *line,
                        tokens[0].0,
                        format!("expected `table <operation>:` or `order:`, found `{other}`"),
                    );
                }
            }
        }

        let tables: Vec<Vec<usize>> = tables
            .into_iter()
            .zip(&gammas)
            .map(|(table, name)| {
                table.ok_or_else(|| ParseError {
                    position: None,
                    message: format!("missing table for operation `{name}`"),
                })
            })
            .collect::<Result<_, _>>()?;

        let mut order_pairs: Vec<(usize, usize)> = Vec::new();
        for &(x, y, line, col) in &raw_pairs {
            if x == y || order_pairs.contains(&(x, y)) {
                continue;
            }
            if order_pairs.contains(&(y, x)) {
                return err(
                    line,
                    col,
                    format!(
                        "both `{a} <= {b}` and `{b} <= {a}` are listed",
                        a = elements[y],
                        b = elements[x]
                    ),
                );
            }
            order_pairs.push((x, y));
        }
        order_pairs.sort_unstable();
        for &(a, b) in &order_pairs {
            for &(b2, c) in &order_pairs {
                if b == b2 && a != c && !order_pairs.contains(&(a, c)) {
                    return err_global(format!(
                        "order lists `{} <= {}` and `{} <= {}` but not `{} <= {}`",
                        elements[a], elements[b], elements[b], elements[c], elements[a], elements[c]
                    ));
                }
            }
        }

        Ok(StructureDocument {
            elements,
            gammas,
            tables,
            order_pairs,
        })
    }

    /// Canonical serialization; parsing the result reproduces `self`.
    pub fn format(&self) -> String {
        let mut out = String::new();
        out.push_str("gamma-structure v1\n");
        let _ = writeln!(out, "elements: {}", self.elements.join(" "));
        let _ = writeln!(out, "gammas: {}", self.gammas.join(" "));
        let n = self.elements.len();
        for (name, table) in self.gammas.iter().zip(&self.tables) {
            let _ = writeln!(out, "table {name}:");
            for row in 0..n {
                let entries: Vec<&str> = (0..n)
                    .map(|col| self.elements[table[row * n + col]].as_str())
                    .collect();
                let _ = writeln!(out, "{}", entries.join(" "));
            }
        }
        if !self.order_pairs.is_empty() {
            out.push_str("order:\n");
            for &(x, y) in &self.order_pairs {
                let _ = writeln!(out, "{} <= {}", self.elements[x], self.elements[y]);
            }
        }
        out
    }

    /// Names a bare structure `x0 x1 …` / `g0 g1 …` so it can be printed.
    pub fn from_structure(s: &OrderedGammaStructure) -> Self {
        let n = s.n();
        StructureDocument {
            elements: (0..n).map(|i| format!("x{i}")).collect(),
            gammas: (0..s.k()).map(|j| format!("g{j}")).collect(),
            tables: (0..s.k()).map(|op| s.structure().table(op).to_vec()).collect(),
            order_pairs: s.order().strict_pairs(),
        }
    }

    /// The numeric structure this document describes. Dimensions were
    /// checked during parsing, so this cannot fail; validity (associativity,
    /// order compatibility) is a separate question answered by `validate`.
    pub fn to_structure(&self) -> OrderedGammaStructure {
        let n = self.elements.len();
        let structure = GammaStructure::new(n, self.gammas.len(), self.tables.clone())
            .expect("document dimensions are checked at parse time");
        let order = OrderRelation::from_pairs(n, &self.order_pairs);
        OrderedGammaStructure::new(structure, order)
            .expect("document dimensions are checked at parse time")
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn gammas(&self) -> &[String] {
        &self.gammas
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gsg_core::fixtures;

    const TWO_OPS: &str = "\
gamma-structure v1
elements: a b
gammas: g m
table g:
a b
b a
table m:
b a
a b
order:
a <= a
b <= b
";

    #[test]
    fn parses_the_two_operation_example() {
        let doc = StructureDocument::parse(TWO_OPS).unwrap();
        assert_eq!(doc.elements(), ["a", "b"]);
        assert_eq!(doc.gammas(), ["g", "m"]);
        let s = doc.to_structure();
        assert_eq!(s.structure(), &fixtures::parity_pair());
        assert!(s.is_valid());
        // The listed pairs were all reflexive, so the normalized document
        // carries the equality order.
        assert!(doc.order_pairs.is_empty());
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# preamble\n\ngamma-structure v1   # header\nelements: a b\ngammas: g m\ntable g:\na b # row one\nb a\ntable m:\nb a\na b\n";
        let doc = StructureDocument::parse(text).unwrap();
        assert_eq!(doc, StructureDocument::parse(TWO_OPS).unwrap());
    }

    #[test]
    fn round_trips_through_format() {
        for text in [
            TWO_OPS,
            "gamma-structure v1\nelements: e\ngammas: g\ntable g:\ne\n",
            "gamma-structure v1\nelements: p q r\ngammas: min\ntable min:\np p p\np q q\np q r\norder:\np <= q\nq <= r\np <= r\n",
        ] {
            let doc = StructureDocument::parse(text).unwrap();
            let printed = doc.format();
            assert_eq!(StructureDocument::parse(&printed).unwrap(), doc);
            // A second pass changes nothing: the printed form is canonical.
            assert_eq!(StructureDocument::parse(&printed).unwrap().format(), printed);
        }
    }

    #[test]
    fn named_structures_round_trip_numerically() {
        let s = fixtures::with_equality(fixtures::parity_pair());
        let doc = StructureDocument::from_structure(&s);
        let reparsed = StructureDocument::parse(&doc.format()).unwrap();
        assert_eq!(reparsed, doc);
        assert_eq!(reparsed.to_structure().structure(), s.structure());
        assert_eq!(reparsed.to_structure().order(), s.order());
    }

    #[test]
    fn unknown_table_entry_is_located() {
        let text = "gamma-structure v1\nelements: a b\ngammas: g\ntable g:\na b\nb c\n";
        let e = StructureDocument::parse(text).unwrap_err();
        assert_eq!(e.position, Some((6, 3)));
        assert!(e.message.contains("unknown element `c`"), "{e}");
    }

    #[test]
    fn missing_transitive_pair_names_the_triple() {
        let text = "gamma-structure v1\nelements: p q r\ngammas: min\ntable min:\np p p\np q q\np q r\norder:\np <= q\nq <= r\n";
        let e = StructureDocument::parse(text).unwrap_err();
        assert_eq!(e.position, None);
        assert_eq!(
            e.message,
            "order lists `p <= q` and `q <= r` but not `p <= r`"
        );
    }

    #[test]
    fn opposed_pairs_are_rejected() {
        let text = "gamma-structure v1\nelements: a b\ngammas: g\ntable g:\na a\na a\norder:\na <= b\nb <= a\n";
        let e = StructureDocument::parse(text).unwrap_err();
        assert_eq!(e.position, Some((9, 1)));
        assert!(e.message.contains("both `a <= b` and `b <= a`"), "{e}");
    }

    #[test]
    fn structural_mistakes_are_diagnosed() {
        let cases = [
            ("", "empty document"),
            ("gamma-structure v2\n", "expected `gamma-structure v1`"),
            ("gamma-structure v1\ngammas: g\n", "expected `elements:`"),
            (
                "gamma-structure v1\nelements: a a\ngammas: g\n",
                "duplicate element name `a`",
            ),
            (
                "gamma-structure v1\nelements: a\ngammas: g\n",
                "missing table for operation `g`",
            ),
            (
                "gamma-structure v1\nelements: a\ngammas: g\ntable h:\na\n",
                "unknown operation `h`",
            ),
            (
                "gamma-structure v1\nelements: a b\ngammas: g\ntable g:\na b\n",
                "table `g` has 1 of 2 rows",
            ),
            (
                "gamma-structure v1\nelements: a b\ngammas: g\ntable g:\na b a\n",
                "row has 3 entries, expected 2",
            ),
            (
                "gamma-structure v1\nelements: a\ngammas: g\ntable g:\na\nrows: extra\n",
                "expected `table <operation>:` or `order:`",
            ),
            (
                "gamma-structure v1\nelements: a\ngammas: g\ntable g:\na\norder:\na < a\n",
                "expected `<element> <= <element>`",
            ),
        ];
        for (text, needle) in cases {
            let e = StructureDocument::parse(text).unwrap_err();
            assert!(e.message.contains(needle), "wanted `{needle}`, got `{e}`");
        }
    }

    #[test]
    fn reflexive_pairs_are_optional_and_tolerated() {
        let with = "gamma-structure v1\nelements: a b\ngammas: g\ntable g:\na a\na b\norder:\na <= a\na <= b\n";
        let without = "gamma-structure v1\nelements: a b\ngammas: g\ntable g:\na a\na b\norder:\na <= b\n";
        assert_eq!(
            StructureDocument::parse(with).unwrap(),
            StructureDocument::parse(without).unwrap()
        );
    }
}
