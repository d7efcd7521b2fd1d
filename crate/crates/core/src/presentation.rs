//! Monoid presentations, double-coset presentations and the line-based
//! presentation file format.
//!
//! ```text
//! generators: a A b B
//! inverses: a A, b B
//! rules: a a a -> id ; a b a b a b -> id
//! order: shortlex a < A < b < B
//! H: a b
//! K: b a
//! ```

use thiserror::Error;

use crate::rewrite::{RewriteError, RewriteSystem};
use crate::words::{Alphabet, OrderSpec, Symbol, Word, WordError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {source}")]
    Word {
        line: usize,
        #[source]
        source: WordError,
    },
    #[error("line {line}: malformed rule `{text}`")]
    MalformedRule { line: usize, text: String },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: expected `key: value`")]
    MissingColon { line: usize },
    #[error("line {line}: `{key}` appears before `generators:`")]
    NoGenerators { line: usize, key: String },
    #[error("line {line}: inverse pairs must name two generators, got `{text}`")]
    MalformedInverse { line: usize, text: String },
    #[error("`generators:` declared twice")]
    DuplicateGenerators,
    #[error("missing `generators:` line")]
    MissingGenerators,
}

/// `mon⟨X_G, R_G⟩`. Rules generated from declared inverse pairs are kept
/// apart from the explicit ones so the presentation renders back as written.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidPresentation {
    alphabet: Alphabet,
    inverse_pairs: Vec<(Symbol, Symbol)>,
    explicit_rules: Vec<(Word, Word)>,
}

impl MonoidPresentation {
    pub fn new(alphabet: Alphabet, rules: Vec<(Word, Word)>) -> Result<Self, WordError> {
        for (l, r) in &rules {
            for w in [l, r] {
                if w.symbols().iter().any(|s| s.is_tag()) {
                    return Err(WordError::UnexpectedTag(alphabet.render(w)));
                }
                if w.symbols().iter().any(|s| s.index() >= alphabet.len()) {
                    return Err(WordError::UnknownSymbol(alphabet.render(w)));
                }
            }
        }
        Ok(MonoidPresentation { alphabet, inverse_pairs: Vec::new(), explicit_rules: rules })
    }

    /// Declares `a` and `b` mutually inverse, adding `b a -> id` and
    /// `a b -> id` ahead of the explicit rules.
    pub fn add_inverse_pair(&mut self, a: Symbol, b: Symbol) {
        self.alphabet.set_inverse(a, b);
        self.inverse_pairs.push((a, b));
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn inverse_pairs(&self) -> &[(Symbol, Symbol)] {
        &self.inverse_pairs
    }

    pub fn explicit_rules(&self) -> &[(Word, Word)] {
        &self.explicit_rules
    }

    /// All relation pairs `R_G`: free-reduction pairs first, then the
    /// explicit rules, in input order.
    pub fn rules(&self) -> Vec<(Word, Word)> {
        let mut out: Vec<(Word, Word)> = Vec::new();
        for &(a, b) in &self.inverse_pairs {
            for pair in [vec![b, a], vec![a, b]] {
                let w = Word::from(pair);
                if !out.iter().any(|(l, _)| *l == w) {
                    out.push((w, Word::empty()));
                }
            }
        }
        out.extend(self.explicit_rules.iter().cloned());
        out
    }
}

/// `(X_G, R_G, X_H, X_K)` together with the order used for completion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCosetPresentation {
    pub group: MonoidPresentation,
    pub h_generators: Vec<Word>,
    pub k_generators: Vec<Word>,
    pub order: OrderSpec,
}

impl DoubleCosetPresentation {
    pub fn alphabet(&self) -> &Alphabet {
        self.group.alphabet()
    }

    /// Builds the tagged rule set `R_G ∪ {(Hh, H)} ∪ {(kK, K)}`.
    pub fn initial_system(&self) -> Result<RewriteSystem, RewriteError> {
        RewriteSystem::initial(self)
    }

    pub fn render(&self) -> String {
        let al = self.alphabet();
        let mut out = String::new();
        out.push_str(&format!("generators: {}\n", al.generator_names().join(" ")));
        if !self.group.inverse_pairs.is_empty() {
            let pairs: Vec<String> = self
                .group
                .inverse_pairs
                .iter()
                .map(|&(a, b)| format!("{} {}", al.name(a), al.name(b)))
                .collect();
            out.push_str(&format!("inverses: {}\n", pairs.join(", ")));
        }
        if !self.group.explicit_rules.is_empty() {
            let rules: Vec<String> = self
                .group
                .explicit_rules
                .iter()
                .map(|(l, r)| format!("{} -> {}", al.render(l), al.render(r)))
                .collect();
            out.push_str(&format!("rules: {}\n", rules.join(" ; ")));
        }
        out.push_str(&format!("order: {}\n", self.order.render(al)));
        let list = |ws: &[Word]| ws.iter().map(|w| al.render(w)).collect::<Vec<_>>().join(", ");
        if !self.h_generators.is_empty() {
            out.push_str(&format!("H: {}\n", list(&self.h_generators)));
        }
        if !self.k_generators.is_empty() {
            out.push_str(&format!("K: {}\n", list(&self.k_generators)));
        }
        out
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Parses the line-based presentation format.
pub fn parse_presentation(text: &str) -> Result<DoubleCosetPresentation, ParseError> {
    let mut alphabet: Option<Alphabet> = None;
    let mut inverse_pairs: Vec<(Symbol, Symbol)> = Vec::new();
    let mut rules: Vec<(Word, Word)> = Vec::new();
    let mut order_text: Option<(usize, String)> = None;
    let mut h_gens: Vec<Word> = Vec::new();
    let mut k_gens: Vec<Word> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = strip_comment(raw).trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content.split_once(':').ok_or(ParseError::MissingColon { line })?;
        let key = key.trim();
        let value = value.trim();
        let wrap = |source: WordError| ParseError::Word { line, source };
        if key == "generators" {
            if alphabet.is_some() {
                return Err(ParseError::DuplicateGenerators);
            }
            alphabet = Some(Alphabet::new(value.split_whitespace()).map_err(wrap)?);
            continue;
        }
        let Some(al) = alphabet.as_ref() else {
            return Err(ParseError::NoGenerators { line, key: key.to_string() });
        };
        match key {
            "inverses" => {
                for pair in value.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                    let toks: Vec<&str> = pair.split_whitespace().collect();
                    if toks.len() != 2 {
                        return Err(ParseError::MalformedInverse { line, text: pair.to_string() });
                    }
                    let a = al.symbol(toks[0]).filter(|s| !s.is_tag());
                    let b = al.symbol(toks[1]).filter(|s| !s.is_tag());
                    match (a, b) {
                        (Some(a), Some(b)) => inverse_pairs.push((a, b)),
                        _ => return Err(ParseError::MalformedInverse { line, text: pair.to_string() }),
                    }
                }
            }
            "rules" => {
                for rule in value.split(';').map(str::trim).filter(|r| !r.is_empty()) {
                    let (l, r) = rule
                        .split_once("->")
                        .ok_or_else(|| ParseError::MalformedRule { line, text: rule.to_string() })?;
                    if l.trim().is_empty() || r.trim().is_empty() || r.contains("->") {
                        return Err(ParseError::MalformedRule { line, text: rule.to_string() });
                    }
                    let l = al.parse_body(l).map_err(wrap)?;
                    let r = al.parse_body(r).map_err(wrap)?;
                    rules.push((l, r));
                }
            }
            "order" => order_text = Some((line, value.to_string())),
            "H" | "K" => {
                let target = if key == "H" { &mut h_gens } else { &mut k_gens };
                for w in value.split(',').map(str::trim).filter(|w| !w.is_empty()) {
                    target.push(al.parse_body(w).map_err(wrap)?);
                }
            }
            other => return Err(ParseError::UnknownKey { line, key: other.to_string() }),
        }
    }

    let alphabet = alphabet.ok_or(ParseError::MissingGenerators)?;
    let order = match order_text {
        Some((line, t)) => OrderSpec::parse(&alphabet, &t).map_err(|source| ParseError::Word { line, source })?,
        None => OrderSpec::default_for(&alphabet),
    };
    let mut group = MonoidPresentation::new(alphabet, rules).map_err(|source| ParseError::Word { line: 0, source })?;
    for (a, b) in inverse_pairs {
        group.add_inverse_pair(a, b);
    }
    Ok(DoubleCosetPresentation { group, h_generators: h_gens, k_generators: k_gens, order })
}
