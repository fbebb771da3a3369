use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::finalg::{check_residuated_lattice, FinRL, Parts, Relation, Report, Table};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrlError {
    #[error("line {line}, column {column}: expected {expected}")]
    Syntax {
        line: usize,
        column: usize,
        expected: String,
    },
    #[error("{law} fails at {witness:?}")]
    Semantic { law: String, witness: Vec<usize> },
}

impl FrlError {
    fn semantic(law: &str, witness: Vec<usize>) -> Self {
        FrlError::Semantic {
            law: law.to_string(),
            witness,
        }
    }
}

/// An algebra file before any law is checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawAlgebra {
    pub size: usize,
    pub unit: usize,
    pub bot: Option<usize>,
    pub top: Option<usize>,
    pub names: Option<Vec<String>>,
    pub le: Vec<Vec<bool>>,
    pub mul: Vec<Vec<usize>>,
    pub ldiv: Option<Vec<Vec<usize>>>,
    pub rdiv: Option<Vec<Vec<usize>>>,
}

/// JSON mirror of the text format, keys in the same order.
#[derive(Serialize, Deserialize)]
struct JsonAlgebra {
    format: String,
    version: u32,
    size: usize,
    unit: usize,
    bot: Option<usize>,
    top: Option<usize>,
    names: Option<Vec<String>>,
    le: Vec<String>,
    mul: Vec<Vec<usize>>,
    ldiv: Option<Vec<Vec<usize>>>,
    rdiv: Option<Vec<Vec<usize>>>,
}

struct Lines<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim_end()))
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
            .collect();
        Lines { lines, pos: 0 }
    }

    fn eof_line(&self) -> usize {
        self.lines.last().map_or(1, |l| l.0 + 1)
    }

    fn next(&mut self, expected: &str) -> Result<(usize, &'a str), FrlError> {
        let l = self
            .lines
            .get(self.pos)
            .copied()
            .ok_or_else(|| FrlError::Syntax {
                line: self.eof_line(),
                column: 1,
                expected: expected.to_string(),
            })?;
        self.pos += 1;
        Ok(l)
    }

    fn peek_keyword(&self) -> Option<&'a str> {
        self.lines
            .get(self.pos)
            .and_then(|(_, l)| l.split_whitespace().next())
    }
}

fn syntax(line: usize, column: usize, expected: impl Into<String>) -> FrlError {
    FrlError::Syntax {
        line,
        column,
        expected: expected.into(),
    }
}

/// `keyword value` on one line; returns the value and its column.
fn keyed<'a>(lines: &mut Lines<'a>, key: &str) -> Result<(usize, usize, &'a str), FrlError> {
    let (ln, l) = lines.next(&format!("`{key}` line"))?;
    let rest = l
        .strip_prefix(key)
        .filter(|r| r.starts_with(' '))
        .ok_or_else(|| syntax(ln, 1, format!("`{key} <value>`")))?;
    let value = rest.trim();
    Ok((ln, l.len() - rest.trim_start().len() + 1, value))
}

fn index_value(ln: usize, col: usize, v: &str, n: Option<usize>) -> Result<usize, FrlError> {
    let x: usize = v
        .parse()
        .map_err(|_| syntax(ln, col, "a non-negative integer"))?;
    match n {
        Some(n) if x >= n => Err(syntax(ln, col, format!("an index below {n}"))),
        _ => Ok(x),
    }
}

fn optional_index(ln: usize, col: usize, v: &str, n: usize) -> Result<Option<usize>, FrlError> {
    if v == "none" {
        Ok(None)
    } else {
        index_value(ln, col, v, Some(n)).map(Some)
    }
}

fn bit_block(lines: &mut Lines, n: usize) -> Result<Vec<Vec<bool>>, FrlError> {
    (0..n)
        .map(|_| {
            let (ln, l) = lines.next(&format!("a row of {n} characters from 0/1"))?;
            let row: Vec<char> = l.trim().chars().collect();
            if row.len() != n {
                return Err(syntax(ln, 1, format!("a row of {n} characters from 0/1")));
            }
            row.iter()
                .enumerate()
                .map(|(c, ch)| match ch {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => Err(syntax(ln, c + 1, "0 or 1")),
                })
                .collect()
        })
        .collect()
}

fn index_block(lines: &mut Lines, n: usize) -> Result<Vec<Vec<usize>>, FrlError> {
    (0..n)
        .map(|_| {
            let (ln, l) = lines.next(&format!("a row of {n} indices"))?;
            let mut row = vec![];
            let mut col = 1;
            for tok in l.split(' ') {
                if !tok.is_empty() {
                    row.push(index_value(ln, col, tok, Some(n))?);
                }
                col += tok.len() + 1;
            }
            if row.len() != n {
                return Err(syntax(ln, 1, format!("a row of {n} indices")));
            }
            Ok(row)
        })
        .collect()
}

/// Reads the text format without checking any law.
pub fn parse_raw(text: &str) -> Result<RawAlgebra, FrlError> {
    if text.trim_start().starts_with('{') {
        return parse_json_raw(text);
    }
    let mut lines = Lines::new(text);
    let (ln, header) = lines.next("`frl 1` header")?;
    if header.trim() != "frl 1" {
        return Err(syntax(ln, 1, "`frl 1` header"));
    }
    let (ln, col, v) = keyed(&mut lines, "size")?;
    let n = index_value(ln, col, v, None)?;
    if n == 0 {
        return Err(syntax(ln, col, "a positive size"));
    }
    let (ln, col, v) = keyed(&mut lines, "unit")?;
    let unit = index_value(ln, col, v, Some(n))?;
    let (ln, col, v) = keyed(&mut lines, "bot")?;
    let bot = optional_index(ln, col, v, n)?;
    let (ln, col, v) = keyed(&mut lines, "top")?;
    let top = optional_index(ln, col, v, n)?;
    let names = if lines.peek_keyword() == Some("names") {
        let (ln, l) = lines.next("names")?;
        let names: Vec<String> = l.split_whitespace().skip(1).map(String::from).collect();
        if names.len() != n {
            return Err(syntax(ln, 1, format!("{n} names")));
        }
        Some(names)
    } else {
        None
    };
    let section = |lines: &mut Lines, key: &str| -> Result<(), FrlError> {
        let (ln, l) = lines.next(&format!("`{key}` section"))?;
        if l.trim() != key {
            return Err(syntax(ln, 1, format!("`{key}` section")));
        }
        Ok(())
    };
    section(&mut lines, "le")?;
    let le = bit_block(&mut lines, n)?;
    section(&mut lines, "mul")?;
    let mul = index_block(&mut lines, n)?;
    let mut ldiv = None;
    let mut rdiv = None;
    if lines.peek_keyword() == Some("ldiv") {
        section(&mut lines, "ldiv")?;
        ldiv = Some(index_block(&mut lines, n)?);
    }
    if lines.peek_keyword() == Some("rdiv") {
        section(&mut lines, "rdiv")?;
        rdiv = Some(index_block(&mut lines, n)?);
    }
    let (ln, l) = lines.next("`end`")?;
    if l.trim() != "end" {
        return Err(syntax(ln, 1, "`end`"));
    }
    if let Some(&(ln, _)) = lines.lines.get(lines.pos) {
        return Err(syntax(ln, 1, "end of input"));
    }
    Ok(RawAlgebra {
        size: n,
        unit,
        bot,
        top,
        names,
        le,
        mul,
        ldiv,
        rdiv,
    })
}

fn parse_json_raw(text: &str) -> Result<RawAlgebra, FrlError> {
    let j: JsonAlgebra =
        serde_json::from_str(text).map_err(|e| syntax(e.line(), e.column(), e.to_string()))?;
    let n = j.size;
    let bad = |what: &str| syntax(1, 1, what.to_string());
    if j.format != "frl" || j.version != 1 {
        return Err(bad("format \"frl\", version 1"));
    }
    if n == 0 {
        return Err(bad("a positive size"));
    }
    let le: Vec<Vec<bool>> =
        j.le.iter()
            .map(|r| r.chars().map(|c| c == '1').collect())
            .collect();
    let square_bits = le.len() == n
        && j.le
            .iter()
            .all(|r| r.len() == n && r.chars().all(|c| c == '0' || c == '1'));
    let square = |t: &Vec<Vec<usize>>| {
        t.len() == n && t.iter().all(|r| r.len() == n && r.iter().all(|&v| v < n))
    };
    if !square_bits {
        return Err(bad("an n by n le block of 0/1"));
    }
    if !square(&j.mul)
        || j.ldiv.as_ref().is_some_and(|t| !square(t))
        || j.rdiv.as_ref().is_some_and(|t| !square(t))
    {
        return Err(bad("n by n tables of indices below n"));
    }
    if j.unit >= n || j.bot.is_some_and(|b| b >= n) || j.top.is_some_and(|t| t >= n) {
        return Err(bad("constants below size"));
    }
    if j.names.as_ref().is_some_and(|ns| ns.len() != n) {
        return Err(bad("one name per element"));
    }
    Ok(RawAlgebra {
        size: n,
        unit: j.unit,
        bot: j.bot,
        top: j.top,
        names: j.names,
        le,
        mul: j.mul,
        ldiv: j.ldiv,
        rdiv: j.rdiv,
    })
}

/// `x` such that every member of `set` lies below it, if it is itself a member.
fn greatest(leq: &Relation, set: &[usize]) -> Option<usize> {
    set.iter()
        .copied()
        .find(|&m| set.iter().all(|&s| leq.holds(s, m)))
}

/// Builds tables for any well-shaped file. Missing bounds and divisions are
/// filled with a placeholder so the law report, not this step, finds the fault.
pub fn assemble(raw: &RawAlgebra) -> FinRL {
    let n = raw.size;
    let leq = Relation::from_fn(n, |x, y| raw.le[x][y]);
    let geq = leq.transpose();
    let meet = Table::from_fn(n, |x, y| {
        let lower: Vec<usize> = (0..n)
            .filter(|&z| leq.holds(z, x) && leq.holds(z, y))
            .collect();
        greatest(&leq, &lower).unwrap_or(x)
    });
    let join = Table::from_fn(n, |x, y| {
        let upper: Vec<usize> = (0..n)
            .filter(|&z| leq.holds(x, z) && leq.holds(y, z))
            .collect();
        greatest(&geq, &upper).unwrap_or(x)
    });
    let mul = Table::from_rows(&raw.mul).expect("shape checked by the parser");
    let ldiv = match &raw.ldiv {
        Some(t) => Table::from_rows(t).expect("shape checked"),
        None => Table::from_fn(n, |x, z| {
            let sols: Vec<usize> = (0..n).filter(|&y| leq.holds(mul.get(x, y), z)).collect();
            greatest(&leq, &sols).unwrap_or(0)
        }),
    };
    let rdiv = match &raw.rdiv {
        Some(t) => Table::from_rows(t).expect("shape checked"),
        None => Table::from_fn(n, |z, y| {
            let sols: Vec<usize> = (0..n).filter(|&x| leq.holds(mul.get(x, y), z)).collect();
            greatest(&leq, &sols).unwrap_or(0)
        }),
    };
    FinRL::from_parts(Parts {
        leq,
        meet,
        join,
        mul,
        ldiv,
        rdiv,
        unit: raw.unit,
        bot: raw.bot,
        top: raw.top,
        names: raw.names.clone(),
    })
    .expect("shape checked by the parser")
}

/// Full law report for a well-shaped file.
pub fn check_raw(raw: &RawAlgebra) -> Report {
    check_residuated_lattice(&assemble(raw))
}

/// Parses and checks every law; the first failure becomes a semantic error.
pub fn parse_frl(text: &str) -> Result<FinRL, FrlError> {
    let alg = assemble(&parse_raw(text)?);
    match check_residuated_lattice(&alg).first_failure() {
        Some(f) => Err(FrlError::semantic(
            &f.law,
            f.witness.clone().unwrap_or_default(),
        )),
        None => Ok(alg),
    }
}

/// Names must be non-empty and whitespace-free to survive the text format.
fn text_safe(i: usize, s: &str) -> String {
    let t: String = s.split_whitespace().collect();
    if t.is_empty() {
        format!("e{i}")
    } else {
        t
    }
}

fn rows(t: &Table) -> Vec<Vec<usize>> {
    t.to_rows()
}

pub fn to_raw(a: &FinRL) -> RawAlgebra {
    let n = a.size();
    RawAlgebra {
        size: n,
        unit: a.unit(),
        bot: a.bot(),
        top: a.top(),
        names: a.names().map(|ns| {
            ns.iter()
                .enumerate()
                .map(|(i, s)| text_safe(i, s))
                .collect()
        }),
        le: (0..n)
            .map(|x| (0..n).map(|y| a.leq(x, y)).collect())
            .collect(),
        mul: rows(a.mul_table()),
        ldiv: Some(rows(a.ldiv_table())),
        rdiv: Some(rows(a.rdiv_table())),
    }
}

fn push_block(out: &mut String, key: &str, t: &[Vec<usize>]) {
    out.push_str(key);
    out.push('\n');
    for r in t {
        let cells: Vec<String> = r.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
}

pub fn render_raw(raw: &RawAlgebra) -> String {
    let opt = |v: Option<usize>| v.map_or("none".to_string(), |x| x.to_string());
    let mut out = format!(
        "frl 1\nsize {}\nunit {}\nbot {}\ntop {}\n",
        raw.size,
        raw.unit,
        opt(raw.bot),
        opt(raw.top)
    );
    if let Some(names) = &raw.names {
        out.push_str(&format!("names {}\n", names.join(" ")));
    }
    out.push_str("le\n");
    for r in &raw.le {
        out.extend(r.iter().map(|&b| if b { '1' } else { '0' }));
        out.push('\n');
    }
    push_block(&mut out, "mul", &raw.mul);
    if let Some(l) = &raw.ldiv {
        push_block(&mut out, "ldiv", l);
    }
    if let Some(r) = &raw.rdiv {
        push_block(&mut out, "rdiv", r);
    }
    out.push_str("end\n");
    out
}

/// Text rendering with both division sections.
pub fn render_frl(a: &FinRL) -> String {
    render_raw(&to_raw(a))
}

pub fn render_json(a: &FinRL) -> serde_json::Value {
    let raw = to_raw(a);
    let j = JsonAlgebra {
        format: "frl".into(),
        version: 1,
        size: raw.size,
        unit: raw.unit,
        bot: raw.bot,
        top: raw.top,
        names: raw.names,
        le: raw
            .le
            .iter()
            .map(|r| r.iter().map(|&b| if b { '1' } else { '0' }).collect())
            .collect(),
        mul: raw.mul,
        ldiv: raw.ldiv,
        rdiv: raw.rdiv,
    };
    serde_json::to_value(j).expect("plain data")
}

/// Splits a stream of concatenated text documents after each `end` line.
pub fn split_documents(text: &str) -> Vec<String> {
    let mut docs = vec![];
    let mut cur = String::new();
    for line in text.lines() {
        cur.push_str(line);
        cur.push('\n');
        if line.trim() == "end" {
            docs.push(std::mem::take(&mut cur));
        }
    }
    if !cur.trim().is_empty() {
        docs.push(cur);
    }
    docs
}
