//! Binary words with a packed dense view and a lazily computed run-length view.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::WordError;

/// Longest word stored in packed form.
pub const PACKED_MAX: usize = 64;

#[derive(Clone, Debug)]
enum Letters {
    /// First letter is the most significant of the `len` low bits.
    Packed { code: u64, len: u32 },
    Long(Box<[u8]>),
}

/// A finite word over `{0, 1}`.
///
/// Words of at most [`PACKED_MAX`] letters are stored as an integer code read
/// with the first letter most significant, so `011001` has code 25.
#[derive(Clone)]
pub struct Word {
    letters: Letters,
    runs: OnceLock<RunTuple>,
}

impl Word {
    pub fn empty() -> Self {
        Word::from_code(0, 0)
    }

    /// Builds a word of length `len` from its integer code. Bits above `len` are ignored.
    pub fn from_code(code: u64, len: usize) -> Self {
        assert!(len <= PACKED_MAX, "packed words hold at most {PACKED_MAX} letters");
        let code = if len == 64 { code } else { code & ((1u64 << len) - 1) };
        Word {
            letters: Letters::Packed { code, len: len as u32 },
            runs: OnceLock::new(),
        }
    }

    /// Builds a word from letters; every entry must be 0 or 1.
    pub fn from_letters(letters: &[u8]) -> Self {
        debug_assert!(letters.iter().all(|&b| b <= 1));
        if letters.len() <= PACKED_MAX {
            let code = letters.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64);
            Word::from_code(code, letters.len())
        } else {
            Word {
                letters: Letters::Long(letters.into()),
                runs: OnceLock::new(),
            }
        }
    }

    pub fn len(&self) -> usize {
        match &self.letters {
            Letters::Packed { len, .. } => *len as usize,
            Letters::Long(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Integer code of the word, available when it fits the packed form.
    pub fn code(&self) -> Option<u64> {
        match &self.letters {
            Letters::Packed { code, .. } => Some(*code),
            Letters::Long(_) => None,
        }
    }

    pub fn letter(&self, i: usize) -> u8 {
        match &self.letters {
            Letters::Packed { code, len } => {
                assert!(i < *len as usize);
                ((code >> (*len as usize - 1 - i)) & 1) as u8
            }
            Letters::Long(v) => v[i],
        }
    }

    pub fn first(&self) -> Option<u8> {
        (!self.is_empty()).then(|| self.letter(0))
    }

    pub fn last(&self) -> Option<u8> {
        (!self.is_empty()).then(|| self.letter(self.len() - 1))
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = u8> + '_ {
        (0..self.len()).map(move |i| self.letter(i))
    }

    pub fn to_letters(&self) -> Vec<u8> {
        match &self.letters {
            Letters::Long(v) => v.to_vec(),
            _ => self.iter().collect(),
        }
    }

    /// Number of occurrences of `letter`, written `|w|_a` in the literature.
    pub fn count(&self, letter: u8) -> usize {
        match &self.letters {
            Letters::Packed { code, .. } => {
                let ones = code.count_ones() as usize;
                if letter == 1 {
                    ones
                } else {
                    self.len() - ones
                }
            }
            Letters::Long(v) => v.iter().filter(|&&b| b == letter).count(),
        }
    }

    pub fn runs(&self) -> &RunTuple {
        self.runs.get_or_init(|| RunTuple::of_letters(self.iter()))
    }

    pub fn num_runs(&self) -> usize {
        self.runs().len()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.to_letters();
        v.extend(other.iter());
        Word::from_letters(&v)
    }

    /// `self` repeated `times` times.
    pub fn pow(&self, times: usize) -> Word {
        let base = self.to_letters();
        let mut v = Vec::with_capacity(base.len() * times);
        for _ in 0..times {
            v.extend_from_slice(&base);
        }
        Word::from_letters(&v)
    }

    /// Exchanges the letters 0 and 1.
    pub fn complement(&self) -> Word {
        match &self.letters {
            Letters::Packed { code, len } => {
                let mask = if *len == 64 { u64::MAX } else { (1u64 << len) - 1 };
                Word::from_code(!code & mask, *len as usize)
            }
            Letters::Long(v) => Word::from_letters(&v.iter().map(|b| 1 - b).collect::<Vec<_>>()),
        }
    }

    pub fn reverse(&self) -> Word {
        match &self.letters {
            Letters::Packed { code, len } => {
                let r = if *len == 0 { 0 } else { code.reverse_bits() >> (64 - len) };
                Word::from_code(r, *len as usize)
            }
            Letters::Long(v) => {
                let mut v = v.to_vec();
                v.reverse();
                Word::from_letters(&v)
            }
        }
    }

    /// Smallest member, by integer code, of `{w, complement, reverse, reverse-complement}`.
    /// All four share the same maximal subword occurrences.
    pub fn symmetry_class_representative(&self) -> Word {
        let c = self.complement();
        let candidates = [self.reverse(), c.reverse(), c];
        candidates
            .into_iter()
            .fold(self.clone(), |best, cand| if cand < best { cand } else { best })
    }

    pub fn is_palindrome(&self) -> bool {
        *self == self.reverse()
    }
}

/// Representative of the symmetry class of the `len`-letter word with `code`.
pub fn class_representative_code(code: u64, len: usize) -> u64 {
    if len == 0 {
        return 0;
    }
    let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
    let comp = !code & mask;
    let rev = code.reverse_bits() >> (64 - len);
    let rev_comp = !rev & mask;
    code.min(comp).min(rev).min(rev_comp)
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        match (&self.letters, &other.letters) {
            (Letters::Packed { code: a, len: la }, Letters::Packed { code: b, len: lb }) => {
                a == b && la == lb
            }
            _ => self.len() == other.len() && self.iter().eq(other.iter()),
        }
    }
}

impl Eq for Word {}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.len().hash(state);
        match &self.letters {
            Letters::Packed { code, .. } => code.hash(state),
            Letters::Long(v) => v.hash(state),
        }
    }
}

/// Words compare by length first, then by their letters read as a binary number.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| match (self.code(), other.code()) {
            (Some(a), Some(b)) => a.cmp(&b),
            _ => self.iter().cmp(other.iter()),
        })
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{self}\")")
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a string of `0` and `1` characters. The empty string is the empty word.
pub fn parse_word(text: &str) -> Result<Word, WordError> {
    let mut letters = Vec::with_capacity(text.len());
    for (index, ch) in text.chars().enumerate() {
        match ch {
            '0' => letters.push(0),
            '1' => letters.push(1),
            other => return Err(WordError::InvalidLetter { index, found: other }),
        }
    }
    Ok(Word::from_letters(&letters))
}

/// Run-length view: the first letter and the lengths of the maximal blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RunTuple {
    first_letter: u8,
    runs: Vec<u32>,
}

impl RunTuple {
    pub fn new(first_letter: u8, runs: Vec<u32>) -> Result<Self, WordError> {
        if first_letter > 1 {
            return Err(WordError::InvalidLetter { index: 0, found: char::from(b'0' + first_letter) });
        }
        if let Some(pos) = runs.iter().position(|&r| r == 0) {
            return Err(WordError::EmptyRun { index: pos });
        }
        Ok(RunTuple { first_letter, runs })
    }

    fn of_letters(mut letters: impl Iterator<Item = u8>) -> Self {
        let Some(first) = letters.next() else {
            return RunTuple { first_letter: 0, runs: Vec::new() };
        };
        let mut runs = vec![1u32];
        let mut prev = first;
        for b in letters {
            if b == prev {
                *runs.last_mut().unwrap() += 1;
            } else {
                runs.push(1);
                prev = b;
            }
        }
        RunTuple { first_letter: first, runs }
    }

    pub fn first_letter(&self) -> u8 {
        self.first_letter
    }

    pub fn runs(&self) -> &[u32] {
        &self.runs
    }

    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Total number of letters.
    pub fn total(&self) -> u64 {
        self.runs.iter().map(|&r| r as u64).sum()
    }

    /// Letter of the run at `index` (0-based).
    pub fn letter_of(&self, index: usize) -> u8 {
        self.first_letter ^ (index as u8 & 1)
    }

    pub fn to_word(&self) -> Word {
        let mut v = Vec::with_capacity(self.total() as usize);
        for (i, &r) in self.runs.iter().enumerate() {
            let b = self.letter_of(i);
            v.extend(std::iter::repeat_n(b, r as usize));
        }
        Word::from_letters(&v)
    }
}

pub fn to_runs(w: &Word) -> RunTuple {
    w.runs().clone()
}

pub fn from_runs(rt: &RunTuple) -> Word {
    rt.to_word()
}

/// Formats as `s:l1,l2,...`, e.g. `0:4,2,1,3,2,1`.
impl fmt::Display for RunTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.first_letter)?;
        for (i, r) in self.runs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl FromStr for RunTuple {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (first, rest) = s
            .split_once(':')
            .ok_or_else(|| WordError::MalformedRuns(s.to_string()))?;
        let first_letter = match first.trim() {
            "0" => 0,
            "1" => 1,
            _ => return Err(WordError::MalformedRuns(s.to_string())),
        };
        let rest = rest.trim();
        let mut runs = Vec::new();
        if !rest.is_empty() {
            for part in rest.split(',') {
                let v: i64 = part
                    .trim()
                    .parse()
                    .map_err(|_| WordError::MalformedRuns(s.to_string()))?;
                if v <= 0 {
                    return Err(WordError::EmptyRun { index: runs.len() });
                }
                runs.push(u32::try_from(v).map_err(|_| WordError::MalformedRuns(s.to_string()))?);
            }
        }
        RunTuple::new(first_letter, runs)
    }
}

/// All words of length `n` starting with `start_letter`, in increasing code order.
///
/// `n = 0` yields only the empty word.
pub fn words_of_length(n: usize, start_letter: u8) -> impl Iterator<Item = Word> {
    assert!(n < PACKED_MAX, "enumeration is limited to {} letters", PACKED_MAX - 1);
    let (lo, hi) = if n == 0 {
        (0u64, 1u64)
    } else {
        let half = 1u64 << (n - 1);
        if start_letter == 0 {
            (0, half)
        } else {
            (half, 2 * half)
        }
    };
    (lo..hi).map(move |code| Word::from_code(code, n))
}
