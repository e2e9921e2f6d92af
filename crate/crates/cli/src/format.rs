//! Plain-text election files.
//!
//! ```text
//! proprep v1
//! 4 3 1 0 cc sum borda
//! c1
//! c2
//! c3
//! c4
//! c1 c2 c3 c4
//! c2 c3 c4 c1
//! c3 c2 c1 c4
//! ```
//!
//! The second line is `m n k R rule objective misrep` where `misrep` is one
//! of `borda`, `approval` or `explicit`. Approval files end with an
//! `#approve` block holding one line of approved names per voter (`-` for
//! nobody); explicit files end with a `#matrix` block holding one row per
//! voter, columns in candidate order. Matrix entries may be integers or
//! fractions `p/q`; fractions are scaled to integers by the common
//! denominator. Blank lines are ignored.

use std::collections::HashMap;
use std::fmt::Write as _;

use proprep_core::election::{build_misrep, scale_rationals};
use proprep_core::{Election, MisrepMatrix, MisrepSpec, Objective, ProblemInstance, Rule};

use crate::error::CliError;

pub const MAGIC: &str = "proprep v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Borda,
    Approval,
    Explicit,
}

struct Lines<'a> {
    inner: Box<dyn Iterator<Item = (usize, &'a str)> + 'a>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let inner = Box::new(
            text.lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l.trim()))
                .filter(|(_, l)| !l.is_empty()),
        );
        Lines { inner, last: 0 }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str), CliError> {
        match self.inner.next() {
            Some((no, l)) => {
                self.last = no;
                Ok((no, l))
            }
            None => Err(CliError::parse(self.last + 1, format!("unexpected end of file, expected {what}"))),
        }
    }
}

fn field<T: std::str::FromStr>(line: usize, name: &str, s: &str) -> Result<T, CliError> {
    s.parse()
        .map_err(|_| CliError::parse(line, format!("bad {name} '{s}'")))
}

fn names_to_indices(
    line: usize,
    index: &HashMap<&str, usize>,
    tokens: &[&str],
) -> Result<Vec<usize>, CliError> {
    tokens
        .iter()
        .map(|t| {
            index
                .get(t)
                .copied()
                .ok_or_else(|| CliError::parse(line, format!("unknown candidate '{t}'")))
        })
        .collect()
}

fn parse_entry(line: usize, s: &str) -> Result<(u64, u64), CliError> {
    match s.split_once('/') {
        Some((p, q)) => Ok((field(line, "numerator", p)?, field(line, "denominator", q)?)),
        None => Ok((field(line, "matrix entry", s)?, 1)),
    }
}

/// Parses an election file.
pub fn parse_instance(text: &str) -> Result<ProblemInstance, CliError> {
    let mut lines = Lines::new(text);
    let (no, magic) = lines.next("header")?;
    if magic != MAGIC {
        return Err(CliError::parse(no, format!("expected '{MAGIC}'")));
    }

    let (hl, header) = lines.next("parameter line")?;
    let h: Vec<&str> = header.split_whitespace().collect();
    if h.len() != 7 {
        return Err(CliError::parse(hl, "expected 'm n k R rule objective misrep'"));
    }
    let m: usize = field(hl, "m", h[0])?;
    let n: usize = field(hl, "n", h[1])?;
    let k: usize = field(hl, "k", h[2])?;
    let bound: u64 = field(hl, "R", h[3])?;
    let rule: Rule = field(hl, "rule", h[4])?;
    let objective: Objective = field(hl, "objective", h[5])?;
    let kind = match h[6] {
        "borda" => Kind::Borda,
        "approval" => Kind::Approval,
        "explicit" => Kind::Explicit,
        other => return Err(CliError::parse(hl, format!("unknown misrepresentation kind '{other}'"))),
    };
    if m == 0 || n == 0 {
        return Err(CliError::parse(hl, "need at least one candidate and one voter"));
    }

    let mut names = Vec::with_capacity(m);
    let mut index = HashMap::new();
    for c in 0..m {
        let (no, name) = lines.next("candidate name")?;
        if name.contains(char::is_whitespace) || name.starts_with('#') || name == "-" {
            return Err(CliError::parse(no, format!("bad candidate name '{name}'")));
        }
        if index.insert(name, c).is_some() {
            return Err(CliError::parse(no, format!("duplicate candidate '{name}'")));
        }
        names.push(name.to_string());
    }

    let mut votes = Vec::with_capacity(n);
    for v in 0..n {
        let (no, line) = lines.next("vote")?;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let vote = names_to_indices(no, &index, &tokens)?;
        if vote.len() != m {
            return Err(CliError::parse(no, format!("vote {} ranks {} candidates, expected {m}", v + 1, vote.len())));
        }
        let mut seen = vec![false; m];
        for (&c, t) in vote.iter().zip(&tokens) {
            if std::mem::replace(&mut seen[c], true) {
                return Err(CliError::parse(no, format!("candidate '{t}' ranked twice")));
            }
        }
        votes.push(vote);
    }
    let election = Election::new(names, votes).map_err(|e| CliError::parse(hl, e.to_string()))?;

    let (spec, block_line) = match kind {
        Kind::Borda => (MisrepSpec::Borda, hl),
        Kind::Approval => {
            let (bl, tag) = lines.next("#approve block")?;
            if tag != "#approve" {
                return Err(CliError::parse(bl, "expected '#approve'"));
            }
            let mut sets = Vec::with_capacity(n);
            for _ in 0..n {
                let (no, line) = lines.next("approval set")?;
                if line == "-" {
                    sets.push(Vec::new());
                    continue;
                }
                let tokens: Vec<&str> = line.split_whitespace().collect();
                let set = names_to_indices(no, &index, &tokens)?;
                check_approval_row(no, &election, sets.len(), &set)?;
                sets.push(set);
            }
            (MisrepSpec::Approval(sets), bl)
        }
        Kind::Explicit => {
            let (bl, tag) = lines.next("#matrix block")?;
            if tag != "#matrix" {
                return Err(CliError::parse(bl, "expected '#matrix'"));
            }
            let mut rows = Vec::with_capacity(n);
            for v in 0..n {
                let (no, line) = lines.next("matrix row")?;
                let row = line
                    .split_whitespace()
                    .map(|s| parse_entry(no, s))
                    .collect::<Result<Vec<_>, _>>()?;
                if row.len() != m {
                    return Err(CliError::parse(no, format!("matrix row {} has {} entries, expected {m}", v + 1, row.len())));
                }
                check_monotone_row(no, &election, v, &row)?;
                rows.push(row);
            }
            let scaled = scale_rationals(&rows).map_err(|e| CliError::parse(bl, e.to_string()))?;
            (MisrepSpec::Explicit(scaled), bl)
        }
    };
    if let Ok((no, _)) = lines.next("") {
        return Err(CliError::parse(no, "trailing content"));
    }

    let matrix = build_misrep(&election, &spec).map_err(|e| CliError::parse(block_line, e.to_string()))?;
    ProblemInstance::new(election, matrix, rule, objective, k, bound).map_err(|e| CliError::parse(hl, e.to_string()))
}

fn check_approval_row(line: usize, e: &Election, v: usize, set: &[usize]) -> Result<(), CliError> {
    let mut approved = vec![false; e.m()];
    for &c in set {
        approved[c] = true;
    }
    let vote = e.vote(v);
    let len = set.len();
    if let Some(c) = vote[..len.min(vote.len())].iter().find(|&&c| !approved[c]) {
        return Err(CliError::parse(
            line,
            format!("approved set is not a prefix of vote {}: '{}' is missing", v + 1, e.name(*c)),
        ));
    }
    Ok(())
}

fn check_monotone_row(line: usize, e: &Election, v: usize, row: &[(u64, u64)]) -> Result<(), CliError> {
    // compare p1/q1 <= p2/q2 without overflow
    let le = |a: (u64, u64), b: (u64, u64)| u128::from(a.0) * u128::from(b.1) <= u128::from(b.0) * u128::from(a.1);
    for w in e.vote(v).windows(2) {
        if row[w[0]].1 == 0 || row[w[1]].1 == 0 {
            return Err(CliError::parse(line, "zero denominator"));
        }
        if !le(row[w[0]], row[w[1]]) {
            return Err(CliError::parse(
                line,
                format!(
                    "voter {} ranks '{}' above '{}' but gives it a larger value",
                    v + 1,
                    e.name(w[0]),
                    e.name(w[1])
                ),
            ));
        }
    }
    Ok(())
}

/// Renders an instance. Borda matrices are written as `borda`, other 0/1
/// matrices as `approval`, anything else as `explicit`.
pub fn render_instance(inst: &ProblemInstance) -> Result<String, CliError> {
    let e = &inst.election;
    for name in e.names() {
        if name.is_empty() || name.contains(char::is_whitespace) || name.starts_with('#') || name == "-" {
            return Err(CliError::Usage(format!("candidate name '{name}' cannot be written to a file")));
        }
    }
    let r = &inst.matrix;
    let kind = if build_misrep(e, &MisrepSpec::Borda).as_ref() == Ok(r) {
        Kind::Borda
    } else if r.is_binary() {
        Kind::Approval
    } else {
        Kind::Explicit
    };
    let kind_name = match kind {
        Kind::Borda => "borda",
        Kind::Approval => "approval",
        Kind::Explicit => "explicit",
    };

    let mut out = String::new();
    writeln!(out, "{MAGIC}").unwrap();
    writeln!(
        out,
        "{} {} {} {} {} {} {kind_name}",
        e.m(),
        e.n(),
        inst.k,
        inst.bound,
        inst.rule,
        inst.objective
    )
    .unwrap();
    for name in e.names() {
        writeln!(out, "{name}").unwrap();
    }
    for vote in e.votes() {
        writeln!(out, "{}", join_names(e, vote)).unwrap();
    }
    match kind {
        Kind::Borda => {}
        Kind::Approval => {
            out.push_str("#approve\n");
            for (v, vote) in e.votes().iter().enumerate() {
                let approved: Vec<usize> = vote.iter().copied().filter(|&c| r.get(v, c) == 0).collect();
                if approved.is_empty() {
                    out.push_str("-\n");
                } else {
                    writeln!(out, "{}", join_names(e, &approved)).unwrap();
                }
            }
        }
        Kind::Explicit => out.push_str(&render_matrix(r)),
    }
    Ok(out)
}

fn join_names(e: &Election, cands: &[usize]) -> String {
    cands.iter().map(|&c| e.name(c)).collect::<Vec<_>>().join(" ")
}

fn render_matrix(r: &MisrepMatrix) -> String {
    let mut out = String::from("#matrix\n");
    for v in 0..r.n() {
        let row: Vec<String> = r.row(v).iter().map(u64::to_string).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}
