//! n-ary block codes and the constraints a code must meet before it can be
//! turned into an algebra.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeError {
    AlphabetTooSmall(usize),
    EmptyWord,
    LengthMismatch { word: usize, expected: usize, found: usize },
    SymbolOutOfRange { word: usize, position: usize, symbol: usize, n: usize },
    DuplicateWord { word: usize },
}

impl fmt::Display for CodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeError::AlphabetTooSmall(n) => write!(f, "alphabet size {n} is below 2"),
            CodeError::EmptyWord => write!(f, "codewords must have length at least 1"),
            CodeError::LengthMismatch { word, expected, found } => {
                write!(f, "word {word} has length {found}, expected {expected}")
            }
            CodeError::SymbolOutOfRange { word, position, symbol, n } => write!(
                f,
                "word {word} position {position}: symbol {symbol} is outside 0..{}",
                n - 1
            ),
            CodeError::DuplicateWord { word } => write!(f, "word {word} is a duplicate"),
        }
    }
}

impl core::error::Error for CodeError {}

/// Alphabet `{0, …, n-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Alphabet(usize);

impl Alphabet {
    pub fn new(n: usize) -> Result<Self, CodeError> {
        if n < 2 {
            return Err(CodeError::AlphabetTooSmall(n));
        }
        Ok(Alphabet(n))
    }

    pub fn size(self) -> usize {
        self.0
    }

    pub fn contains(self, symbol: usize) -> bool {
        symbol < self.0
    }
}

/// A fixed-length word of symbols.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Codeword(Vec<usize>);

impl Codeword {
    pub fn new(symbols: Vec<usize>) -> Result<Self, CodeError> {
        if symbols.is_empty() {
            return Err(CodeError::EmptyWord);
        }
        Ok(Codeword(symbols))
    }

    pub fn symbols(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Symbol at 1-based position `j`.
    pub fn at(&self, j: usize) -> usize {
        self.0[j - 1]
    }
}

impl<const N: usize> From<[usize; N]> for Codeword {
    /// Panics on `N == 0`.
    fn from(symbols: [usize; N]) -> Self {
        Codeword::new(symbols.to_vec()).expect("non-empty codeword")
    }
}

/// Digit string (`3211`) when every symbol is a single digit, otherwise
/// space-separated decimals.
impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.0.iter().all(|&s| s < 10);
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 && !compact {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Lexicographic comparison of equal-length words.
pub fn lex_compare(u: &Codeword, v: &Codeword) -> Result<Ordering, CodeError> {
    if u.len() != v.len() {
        return Err(CodeError::LengthMismatch { word: 2, expected: u.len(), found: v.len() });
    }
    Ok(u.0.cmp(&v.0))
}

/// An ordered list of `m` words of common length `q` over an alphabet of size `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockCode {
    alphabet: Alphabet,
    length: usize,
    words: Vec<Codeword>,
}

impl BlockCode {
    /// Word indices in errors are 1-based.
    pub fn new(alphabet: Alphabet, length: usize, words: Vec<Codeword>) -> Result<Self, CodeError> {
        if length == 0 {
            return Err(CodeError::EmptyWord);
        }
        for (i, w) in words.iter().enumerate() {
            if w.len() != length {
                return Err(CodeError::LengthMismatch {
                    word: i + 1,
                    expected: length,
                    found: w.len(),
                });
            }
            if let Some(p) = w.0.iter().position(|&s| !alphabet.contains(s)) {
                return Err(CodeError::SymbolOutOfRange {
                    word: i + 1,
                    position: p + 1,
                    symbol: w.0[p],
                    n: alphabet.size(),
                });
            }
        }
        Ok(BlockCode { alphabet, length, words })
    }

    /// Convenience constructor from raw symbol rows; the length is taken
    /// from the first row.
    pub fn from_symbols<W: AsRef<[usize]>>(n: usize, words: &[W]) -> Result<Self, CodeError> {
        let alphabet = Alphabet::new(n)?;
        let length = words.first().map_or(0, |w| w.as_ref().len());
        let words = words
            .iter()
            .map(|w| Codeword::new(w.as_ref().to_vec()))
            .collect::<Result<Vec<_>, _>>()?;
        BlockCode::new(alphabet, length, words)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// `n`
    pub fn alphabet_size(&self) -> usize {
        self.alphabet.size()
    }

    /// `q`
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn words(&self) -> &[Codeword] {
        &self.words
    }

    /// `m`
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Codeword) -> bool {
        self.words.contains(w)
    }
}

/// Sorts the words ascending; duplicate words are an error rather than
/// being merged.
pub fn sort_ascending(c: &BlockCode) -> Result<BlockCode, CodeError> {
    let mut indexed: Vec<(usize, &Codeword)> = c.words.iter().enumerate().collect();
    indexed.sort_by(|a, b| a.1.cmp(b.1).then(a.0.cmp(&b.0)));
    for pair in indexed.windows(2) {
        if pair[0].1 == pair[1].1 {
            return Err(CodeError::DuplicateWord { word: pair[1].0 + 1 });
        }
    }
    Ok(BlockCode {
        alphabet: c.alphabet,
        length: c.length,
        words: indexed.into_iter().map(|(_, w)| w.clone()).collect(),
    })
}

/// Admissibility rules checked by [`validate_admissible`].
///
/// `R1`–`R5` are the stated input constraints on the code. `R6`–`R8` are
/// additional conditions found necessary for the matrix construction to
/// satisfy axiom (1) and (2): without them codes satisfying `R1`–`R5`
/// routinely produce non-BCK tables (e.g. `n=4`, `V={3}` or
/// `V={33111, 42211}` with `n=5`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    /// The code has at least one word.
    NonEmpty,
    /// R1: every symbol lies in `1..n-1`.
    SymbolRange,
    /// R2: symbols are non-increasing from left to right.
    NonIncreasing,
    /// R3: `w[w[k]] ≤ k` for `k = 1..min(n-1, q)`.
    SelfBound,
    /// R4: positions `j ≥ n` carry the symbol 1.
    TrailingOnes,
    /// R5: words are pairwise distinct and strictly ascending.
    Ascending,
    /// R6: each word dominates its predecessor position by position.
    ComponentwiseChain,
    /// R7: every symbol names a chain element, i.e. is below the chain size `c`.
    ChainSymbolBound,
    /// R8: when the word's matrix row has filler ones after column `q`,
    /// the first symbol is at most `q + 1`.
    FillerBound,
}

impl Rule {
    pub fn tag(self) -> &'static str {
        match self {
            Rule::NonEmpty => "R0",
            Rule::SymbolRange => "R1",
            Rule::NonIncreasing => "R2",
            Rule::SelfBound => "R3",
            Rule::TrailingOnes => "R4",
            Rule::Ascending => "R5",
            Rule::ComponentwiseChain => "R6",
            Rule::ChainSymbolBound => "R7",
            Rule::FillerBound => "R8",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Rule::NonEmpty => "the code must contain at least one word",
            Rule::SymbolRange => "symbols must lie in 1..n-1",
            Rule::NonIncreasing => "symbols must be non-increasing left to right",
            Rule::SelfBound => "the symbol at position w[k] must be at most k",
            Rule::TrailingOnes => "positions n and beyond must carry 1",
            Rule::Ascending => "words must be distinct and in ascending lexicographic order",
            Rule::ComponentwiseChain => "each word must be >= its predecessor at every position",
            Rule::ChainSymbolBound => "symbols must be below the chain size c",
            Rule::FillerBound => "the first symbol must be at most q+1 when filler ones follow",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// One rule failure. `word` and `position` are 1-based; `position` is
/// `None` for rules about the code as a whole or about a word pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RuleFailure {
    pub rule: Rule,
    pub word: usize,
    pub position: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub failures: Vec<RuleFailure>,
}

impl ValidationReport {
    pub fn admissible(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failed_rules(&self) -> Vec<Rule> {
        let mut rules: Vec<Rule> = self.failures.iter().map(|f| f.rule).collect();
        rules.sort();
        rules.dedup();
        rules
    }

    pub fn has(&self, rule: Rule) -> bool {
        self.failures.iter().any(|f| f.rule == rule)
    }

    fn fail(&mut self, rule: Rule, word: usize, position: Option<usize>) {
        self.failures.push(RuleFailure { rule, word, position });
    }
}

/// Size of the chain block of the associated matrix: `n-1` when `q < n-1`,
/// `q+1` otherwise. The chain must exceed `q` so that the first word row
/// holds all `q` symbols below the diagonal.
pub(crate) fn chain_size(n: usize, q: usize) -> usize {
    if q + 1 < n {
        n - 1
    } else {
        q + 1
    }
}

/// Checks every admissibility rule and lists every failure.
///
/// All indexing below follows the 1-based convention of the rules: word
/// `i`, position `j`, and `w.at(j)` reads symbol `j`. A symbol used as a
/// position (`w[w[k]]`) that points past `q` refers to the filler part of
/// the matrix row, whose entries are 1, so R3 holds there.
pub fn validate_admissible(c: &BlockCode) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = c.alphabet_size();
    let q = c.length();
    let chain = chain_size(n, q);

    if c.is_empty() {
        report.fail(Rule::NonEmpty, 0, None);
        return report;
    }

    for (idx, w) in c.words().iter().enumerate() {
        let i = idx + 1;

        for j in 1..=q {
            let s = w.at(j);
            if s == 0 || s >= n {
                report.fail(Rule::SymbolRange, i, Some(j));
            }
        }
        for j in 2..=q {
            if w.at(j) > w.at(j - 1) {
                report.fail(Rule::NonIncreasing, i, Some(j));
            }
        }
        for k in 1..=(n - 1).min(q) {
            let p = w.at(k);
            if (1..=q).contains(&p) && w.at(p) > k {
                report.fail(Rule::SelfBound, i, Some(k));
            }
        }
        for j in n..=q {
            if w.at(j) != 1 {
                report.fail(Rule::TrailingOnes, i, Some(j));
            }
        }
        for j in 1..=q {
            if w.at(j) >= chain && w.at(j) < n {
                report.fail(Rule::ChainSymbolBound, i, Some(j));
            }
        }
        // row of word i is chain + i - 1; filler columns are q+1 .. row-1
        let row = chain + i - 1;
        if q + 1 < row && w.at(1) > q + 1 {
            report.fail(Rule::FillerBound, i, Some(1));
        }

        if idx > 0 {
            let prev = &c.words()[idx - 1];
            if prev >= w {
                report.fail(Rule::Ascending, i, None);
            }
            for j in 1..=q {
                if prev.at(j) > w.at(j) {
                    report.fail(Rule::ComponentwiseChain, i, Some(j));
                }
            }
        }
    }
    report
}
