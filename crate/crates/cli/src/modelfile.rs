//! The plain-text model format.
//!
//! ```text
//! # comments run to the end of the line
//! [cmonoid]
//! programs = 1 a bot
//! bot = bot
//! one = 1
//! mul = 1 a bot / a a bot / bot bot bot
//! tests = T F U
//! true = T
//! false = F
//! undef = U
//! neg = F T U
//! and = T F U / F F F / U U U
//! or = T T T / T F U / U U U
//! down = T F F
//! act = ...        # one row per (test, program), tests outermost
//! comp = ...       # one row per program
//! ```
//!
//! A line without `=` continues the previous value, so long tables may be
//! split one row per line.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use ite_core::algebra::BoolAlg;
use ite_core::bset::{BMonoid, BSet};
use ite_core::{Ada, CAlgebra, CMonoid, CSet, ElemId, PointedCarrier, TestAlgebra};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Model { line: usize, source: ite_core::Error },
}

/// Any structure the format can hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelFile {
    Ada(Ada),
    CAlgebra(CAlgebra),
    BoolAlg(BoolAlg),
    CSet(CSet),
    CMonoid(CMonoid),
    BMonoid(BMonoid),
}

impl ModelFile {
    pub fn kind(&self) -> &'static str {
        match self {
            ModelFile::Ada(_) => "ada",
            ModelFile::CAlgebra(_) => "calgebra",
            ModelFile::BoolAlg(_) => "boolalg",
            ModelFile::CSet(_) => "cset",
            ModelFile::CMonoid(_) => "cmonoid",
            ModelFile::BMonoid(_) => "bmonoid",
        }
    }
}

struct Entry {
    value: String,
    line: usize,
    used: bool,
}

struct Section {
    line: usize,
    entries: BTreeMap<String, Entry>,
}

fn err(line: usize, msg: impl Into<String>) -> FileError {
    FileError::Syntax { line, msg: msg.into() }
}

impl Section {
    fn get(&mut self, key: &str) -> Result<(&str, usize), FileError> {
        let line = self.line;
        match self.entries.get_mut(key) {
            Some(e) => {
                e.used = true;
                Ok((e.value.as_str(), e.line))
            }
            None => Err(err(line, format!("missing key `{key}`"))),
        }
    }

    fn has(&self, key: &str) -> bool {
        self.entries.contains_key(key)
    }

    fn names(&mut self, key: &str) -> Result<Vec<String>, FileError> {
        let (v, line) = self.get(key)?;
        let names: Vec<String> = v.split_whitespace().map(str::to_string).collect();
        if names.is_empty() {
            return Err(err(line, format!("`{key}` lists no elements")));
        }
        if let Some((i, n)) = names.iter().enumerate().find(|(i, n)| names[..*i].contains(n)) {
            return Err(err(line, format!("element {i} repeats the name `{n}`")));
        }
        Ok(names)
    }

    fn elem(&mut self, key: &str, names: &[String]) -> Result<ElemId, FileError> {
        let (v, line) = self.get(key)?;
        let words: Vec<&str> = v.split_whitespace().collect();
        match words.as_slice() {
            [w] => lookup(w, names, line),
            _ => Err(err(line, format!("`{key}` takes a single element"))),
        }
    }

    fn row(&mut self, key: &str, names: &[String], len: usize) -> Result<Vec<ElemId>, FileError> {
        let (v, line) = self.get(key)?;
        let v = v.to_string();
        parse_row(&v, names, len, key, line)
    }

    fn table(&mut self, key: &str, rows: usize, cols: usize, names: &[String]) -> Result<Vec<ElemId>, FileError> {
        let (v, line) = self.get(key)?;
        let v = v.to_string();
        let parts: Vec<&str> = v.split('/').collect();
        if parts.len() != rows {
            return Err(err(line, format!("`{key}` needs {rows} rows, found {}", parts.len())));
        }
        let mut out = Vec::with_capacity(rows * cols);
        for p in parts {
            out.extend(parse_row(p, names, cols, key, line)?);
        }
        Ok(out)
    }

    fn finish(self) -> Result<(), FileError> {
        match self.entries.iter().find(|(_, e)| !e.used) {
            Some((k, e)) => Err(err(e.line, format!("unknown key `{k}`"))),
            None => Ok(()),
        }
    }
}

fn lookup(word: &str, names: &[String], line: usize) -> Result<ElemId, FileError> {
    names
        .iter()
        .position(|n| n == word)
        .map(ElemId)
        .ok_or_else(|| err(line, format!("undeclared element `{word}`")))
}

fn parse_row(text: &str, names: &[String], len: usize, key: &str, line: usize) -> Result<Vec<ElemId>, FileError> {
    let words: Vec<&str> = text.split_whitespace().collect();
    if words.len() != len {
        return Err(err(line, format!("`{key}` rows need {len} entries, found {}", words.len())));
    }
    words.iter().map(|w| lookup(w, names, line)).collect()
}

fn split(text: &str) -> Result<(String, Section), FileError> {
    let mut kind: Option<(String, Section)> = None;
    let mut last: Option<String> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if let Some(name) = body.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
            if kind.is_some() {
                return Err(err(line, "only one section per file"));
            }
            kind = Some((
                name.trim().to_string(),
                Section {
                    line,
                    entries: BTreeMap::new(),
                },
            ));
            last = None;
            continue;
        }
        let Some((_, sec)) = kind.as_mut() else {
            return Err(err(line, "expected a section header such as `[ada]`"));
        };
        match body.split_once('=') {
            Some((k, v)) => {
                let k = k.trim().to_string();
                if k.is_empty() {
                    return Err(err(line, "missing key before `=`"));
                }
                if sec.entries.contains_key(&k) {
                    return Err(err(line, format!("duplicate key `{k}`")));
                }
                sec.entries.insert(
                    k.clone(),
                    Entry {
                        value: v.trim().to_string(),
                        line,
                        used: false,
                    },
                );
                last = Some(k);
            }
            None => match &last {
                Some(k) => {
                    let e = sec.entries.get_mut(k).expect("inserted above");
                    e.value.push(' ');
                    e.value.push_str(body);
                }
                None => return Err(err(line, "expected `key = value`")),
            },
        }
    }
    kind.ok_or_else(|| err(1, "no section header"))
}

fn model_err(line: usize) -> impl Fn(ite_core::Error) -> FileError {
    move |source| FileError::Model { line, source }
}

/// Reads the C-algebra keys under `names_key`; `down` makes it an ada.
fn read_calg(sec: &mut Section, names_key: &str) -> Result<TestAlgebra, FileError> {
    let names = sec.names(names_key)?;
    let n = names.len();
    let (t, f, u) = (sec.elem("true", &names)?, sec.elem("false", &names)?, sec.elem("undef", &names)?);
    let neg = sec.row("neg", &names, n)?;
    let and = sec.table("and", n, n, &names)?;
    let or = sec.table("or", n, n, &names)?;
    let down = if sec.has("down") { Some(sec.row("down", &names, n)?) } else { None };
    let at = model_err(sec.line);
    let base = CAlgebra::new(names, neg, and, or, t, f, u).map_err(&at)?;
    Ok(match down {
        Some(d) => TestAlgebra::Ada(Ada::new(base, d).map_err(&at)?),
        None => TestAlgebra::CAlgebra(base),
    })
}

fn read_bool(sec: &mut Section, names_key: &str) -> Result<BoolAlg, FileError> {
    let names = sec.names(names_key)?;
    let n = names.len();
    let (t, f) = (sec.elem("true", &names)?, sec.elem("false", &names)?);
    let neg = sec.row("neg", &names, n)?;
    let and = sec.table("and", n, n, &names)?;
    let or = sec.table("or", n, n, &names)?;
    BoolAlg::new(names, neg, and, or, t, f).map_err(model_err(sec.line))
}

fn read_cset(sec: &mut Section, need_monoid: bool) -> Result<CSet, FileError> {
    let pn = sec.names("programs")?;
    let ns = pn.len();
    let bot = sec.elem("bot", &pn)?;
    let one = if need_monoid || sec.has("one") { Some(sec.elem("one", &pn)?) } else { None };
    let mul = if need_monoid || sec.has("mul") { Some(sec.table("mul", ns, ns, &pn)?) } else { None };
    let tests = read_calg(sec, "tests")?;
    let nm = tests.calg().len();
    let act = sec.table("act", nm * ns, ns, &pn)?;
    let at = model_err(sec.line);
    let carrier = PointedCarrier::new(pn, bot, one, mul).map_err(&at)?;
    CSet::new(carrier, tests, act).map_err(&at)
}

/// Parses one model from `text`.
pub fn parse(text: &str) -> Result<ModelFile, FileError> {
    let (kind, mut sec) = split(text)?;
    let model = match kind.as_str() {
        "ada" => match read_calg(&mut sec, "elements")? {
            TestAlgebra::Ada(a) => ModelFile::Ada(a),
            TestAlgebra::CAlgebra(_) => return Err(err(sec.line, "missing key `down`")),
        },
        "calgebra" => match read_calg(&mut sec, "elements")? {
            TestAlgebra::CAlgebra(a) => ModelFile::CAlgebra(a),
            TestAlgebra::Ada(_) => {
                let line = sec.entries["down"].line;
                return Err(err(line, "a [calgebra] has no `down`; use [ada]"));
            }
        },
        "boolalg" => ModelFile::BoolAlg(read_bool(&mut sec, "elements")?),
        "cset" => ModelFile::CSet(read_cset(&mut sec, false)?),
        "cmonoid" => {
            let cs = read_cset(&mut sec, true)?;
            let (ns, nm) = (cs.programs().len(), cs.calg().len());
            let comp = sec.table("comp", ns, nm, cs.calg().names())?;
            ModelFile::CMonoid(CMonoid::new(cs, comp).map_err(model_err(sec.line))?)
        }
        "bmonoid" => {
            let pn = sec.names("programs")?;
            let ns = pn.len();
            let one = sec.elem("one", &pn)?;
            let mul = sec.table("mul", ns, ns, &pn)?;
            let q = read_bool(&mut sec, "tests")?;
            let nq = q.len();
            let act = sec.table("act", nq * ns, ns, &pn)?;
            let comp = sec.table("comp", ns, nq, q.names())?;
            let at = model_err(sec.line);
            let bs = BSet::new(pn, q, act).map_err(&at)?;
            ModelFile::BMonoid(BMonoid::new(bs, one, mul, comp).map_err(&at)?)
        }
        other => return Err(err(sec.line, format!("unknown section `[{other}]`"))),
    };
    sec.finish()?;
    Ok(model)
}

struct Writer {
    out: String,
}

impl Writer {
    fn list(&mut self, key: &str, names: &[String]) {
        let _ = writeln!(self.out, "{key} = {}", names.join(" "));
    }

    fn one(&mut self, key: &str, name: &str) {
        let _ = writeln!(self.out, "{key} = {name}");
    }

    fn row(&mut self, key: &str, vals: &[ElemId], names: &[String]) {
        let row: Vec<&str> = vals.iter().map(|v| names[v.0].as_str()).collect();
        let _ = writeln!(self.out, "{key} = {}", row.join(" "));
    }

    fn table(&mut self, key: &str, vals: &[ElemId], cols: usize, names: &[String]) {
        let rows: Vec<String> = vals
            .chunks(cols)
            .map(|r| r.iter().map(|v| names[v.0].as_str()).collect::<Vec<_>>().join(" "))
            .collect();
        let _ = writeln!(self.out, "{key} = {}", rows.join(" /\n    "));
    }

    fn calg(&mut self, key: &str, m: &CAlgebra, down: Option<&[ElemId]>) {
        let names = m.names();
        self.list(key, names);
        self.one("true", m.name(m.t()));
        self.one("false", m.name(m.f()));
        self.one("undef", m.name(m.u()));
        self.row("neg", m.neg_table(), names);
        self.table("and", m.and_table(), names.len(), names);
        self.table("or", m.or_table(), names.len(), names);
        if let Some(d) = down {
            self.row("down", d, names);
        }
    }

    fn bool(&mut self, key: &str, q: &BoolAlg) {
        let names = q.names();
        self.list(key, names);
        self.one("true", &names[q.t().0]);
        self.one("false", &names[q.f().0]);
        self.row("neg", q.neg_table(), names);
        self.table("and", q.and_table(), names.len(), names);
        self.table("or", q.or_table(), names.len(), names);
    }

    fn tests(&mut self, m: &TestAlgebra) {
        match m {
            TestAlgebra::Ada(a) => self.calg("tests", a.base(), Some(a.down_table())),
            TestAlgebra::CAlgebra(c) => self.calg("tests", c, None),
        }
    }

    fn cset(&mut self, cs: &CSet) {
        let p = cs.programs();
        let pn = p.names();
        self.list("programs", pn);
        self.one("bot", p.name(p.bot()));
        if let Some(one) = p.one() {
            self.one("one", p.name(one));
        }
        if let Some(mul) = p.mul_table() {
            self.table("mul", mul, pn.len(), pn);
        }
        self.tests(cs.tests());
        self.table("act", cs.act_table(), pn.len(), pn);
    }
}

/// Renders `model` so that [`parse`] reads back an equal model.
pub fn write(model: &ModelFile) -> String {
    let mut w = Writer {
        out: format!("[{}]\n", model.kind()),
    };
    match model {
        ModelFile::Ada(a) => w.calg("elements", a.base(), Some(a.down_table())),
        ModelFile::CAlgebra(c) => w.calg("elements", c, None),
        ModelFile::BoolAlg(q) => w.bool("elements", q),
        ModelFile::CSet(cs) => w.cset(cs),
        ModelFile::CMonoid(cm) => {
            w.cset(cm.cset());
            let tn = cm.calg().names();
            w.table("comp", cm.comp_table(), tn.len(), tn);
        }
        ModelFile::BMonoid(bm) => {
            let pn = bm.bset().names();
            w.list("programs", pn);
            w.one("one", &pn[bm.one().0]);
            w.table("mul", bm.mul_table(), pn.len(), pn);
            w.bool("tests", bm.tests());
            w.table("act", bm.bset().act_table(), pn.len(), pn);
            let tn = bm.tests().names();
            w.table("comp", bm.comp_table(), tn.len(), tn);
        }
    }
    w.out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ite_core::algebra::mk_three;
    use ite_core::functional::{basic_c_monoid, two_element_monoid};

    #[test]
    fn three_round_trips() {
        let m = ModelFile::Ada(mk_three());
        let text = write(&m);
        assert!(text.starts_with("[ada]\nelements = T F U\n"));
        assert_eq!(parse(&text).unwrap(), m);
    }

    #[test]
    fn continuation_lines_and_comments() {
        let m = ModelFile::CMonoid(basic_c_monoid(two_element_monoid()).unwrap());
        let text = write(&m).replace("\n[cmonoid]", "# header\n[cmonoid]");
        assert!(text.contains(" /\n    "));
        assert_eq!(parse(&format!("# leading\n{text}")).unwrap(), m);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let text = "[ada]\nelements = T F U\ntrue = T\nfalse = F\nundef = X\n";
        let e = parse(text).unwrap_err();
        assert_eq!(e.to_string(), "line 5: undeclared element `X`");

        let text = write(&ModelFile::Ada(mk_three())) + "colour = red\n";
        assert!(matches!(parse(&text), Err(FileError::Syntax { line: 14, .. })));

        let text = write(&ModelFile::Ada(mk_three())).replace("neg = F T U", "neg = F T");
        assert!(matches!(parse(&text), Err(FileError::Syntax { line: 6, .. })));

        assert!(matches!(parse("elements = a\n"), Err(FileError::Syntax { line: 1, .. })));
        assert!(matches!(parse("[widget]\nx = 1\n"), Err(FileError::Syntax { line: 1, .. })));
    }

    #[test]
    fn duplicate_names_are_rejected() {
        let text = write(&ModelFile::Ada(mk_three())).replace("elements = T F U", "elements = T F T");
        assert!(matches!(parse(&text), Err(FileError::Syntax { line: 2, .. })));
    }
}
