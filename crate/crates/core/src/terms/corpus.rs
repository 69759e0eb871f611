//! The axioms of every structure in the crate, as parsed identities.

use super::ast::Identity;
use super::check::Semantics;
use super::parser::parse_identity;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// C-algebra axioms C1–C7.
    C,
    /// Ada axioms A1–A6.
    A,
    /// C-set axioms EC1–EC8.
    EC,
    /// C-monoid axioms EM1–EM9.
    EM,
    /// B-set axioms B1–B6.
    B,
    /// B-monoid axioms BM1–BM8.
    BM,
}

impl Family {
    pub fn semantics(self) -> Semantics {
        match self {
            Family::B | Family::BM => Semantics::BMonoid,
            _ => Semantics::CMonoid,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub label: &'static str,
    pub family: Family,
    pub text: &'static str,
    pub identity: Identity,
}

const ENTRIES: &[(&str, Family, &str)] = &[
    ("C1", Family::C, "~~%a = %a"),
    ("C2", Family::C, "~(%a & %b) = ~%a | ~%b"),
    ("C3", Family::C, "%a & %b & %c = %a & (%b & %c)"),
    ("C4", Family::C, "%a & (%b | %c) = %a & %b | %a & %c"),
    ("C5", Family::C, "(%a | %b) & %c = %a & %c | ~%a & %b & %c"),
    ("C6", Family::C, "%a | %a & %b = %a"),
    ("C7", Family::C, "%a & %b | %b & %a = %b & %a | %a & %b"),
    ("A1", Family::A, "F! = F"),
    ("A2", Family::A, "U! = F"),
    ("A3", Family::A, "T! = T"),
    ("A4", Family::A, "%a & %b! = %a & (%a & %b)!"),
    ("A5", Family::A, "%a! | ~%a! = T"),
    ("A6", Family::A, "%a = %a! | %a"),
    ("EC1", Family::EC, "U[s, t] = bot"),
    ("EC2", Family::EC, "%a[%b[s, t], %b[u, v]] = %b[%a[s, u], %a[t, v]]"),
    ("EC3", Family::EC, "%a[%a[s, t], u] = %a[s, u]"),
    ("EC4", Family::EC, "%a[s, %a[t, u]] = %a[s, u]"),
    ("EC5", Family::EC, "(~%a)[s, t] = %a[t, s]"),
    ("EC6", Family::EC, "F[s, t] = t"),
    ("EC7", Family::EC, "(%a & %b)[s, t] = %a[%b[s, t], t]"),
    ("EC8", Family::EC, "%a[s, t] = %a[t, t] ==> (%a & %b)[s, t] = (%a & %b)[t, t]"),
    ("EM1", Family::EM, "1 @ %a = %a"),
    ("EM2", Family::EM, "(s . t) @ %a = s @ t @ %a"),
    ("EM3", Family::EM, "s @ (%a & %b) = s @ %a & s @ %b"),
    ("EM4", Family::EM, "s @ ~%a = ~(s @ %a)"),
    ("EM5", Family::EM, "%a[s, t] . u = %a[s . u, t . u]"),
    ("EM6", Family::EM, "%a[s, t] @ %b = %a & s @ %b | ~%a & t @ %b"),
    ("EM7", Family::EM, "bot @ %a = U"),
    ("EM8", Family::EM, "t @ U = U"),
    ("EM9", Family::EM, "r . %a[s, t] = (r @ %a)[r . s, r . t]"),
    ("B1", Family::B, "%a[s, s] = s"),
    ("B2", Family::B, "%a[%a[s, t], u] = %a[s, u]"),
    ("B3", Family::B, "%a[s, %a[t, u]] = %a[s, u]"),
    ("B4", Family::B, "F[s, t] = t"),
    ("B5", Family::B, "(~%a)[s, t] = %a[t, s]"),
    ("B6", Family::B, "(%a & %b)[s, t] = %a[%b[s, t], t]"),
    ("BM1", Family::BM, "s @ T = T"),
    ("BM2", Family::BM, "s @ %a & s @ %b = s @ (%a & %b)"),
    ("BM3", Family::BM, "s @ ~%a = ~(s @ %a)"),
    ("BM4", Family::BM, "s @ t @ %a = (s . t) @ %a"),
    ("BM5", Family::BM, "%a[s, t] . u = %a[s . u, t . u]"),
    ("BM6", Family::BM, "s . %a[t, u] = (s @ %a)[s . t, s . u]"),
    ("BM7", Family::BM, "%b[s, t] @ %a = %b & s @ %a | ~%b & t @ %a"),
    ("BM8", Family::BM, "1 @ %a = %a"),
];

/// Every axiom keyed by its label, in the order C, A, EC, EM, B, BM.
pub fn builtin_corpus() -> Vec<CorpusEntry> {
    ENTRIES
        .iter()
        .map(|&(label, family, text)| CorpusEntry {
            label,
            family,
            text,
            identity: parse_identity(text).unwrap_or_else(|e| panic!("corpus entry {label}: {e}")),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        let corpus = builtin_corpus();
        let count = |f| corpus.iter().filter(|e| e.family == f).count();
        assert_eq!(
            [Family::C, Family::A, Family::EC, Family::EM, Family::B, Family::BM].map(count),
            [7, 6, 8, 9, 6, 8]
        );
        let quasi: Vec<_> = corpus.iter().filter(|e| e.identity.is_quasi()).map(|e| e.label).collect();
        assert_eq!(quasi, ["EC8"]);
    }

    #[test]
    fn texts_are_printed_forms() {
        for e in builtin_corpus() {
            assert_eq!(e.identity.to_string(), e.text, "{}", e.label);
        }
    }
}
