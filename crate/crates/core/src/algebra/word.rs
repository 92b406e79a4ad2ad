use std::fmt;
use std::str::FromStr;

/// A generator of the free algebra; the alphabet is fixed at {A, B} with
/// A < B.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    A,
    B,
}

impl Generator {
    pub fn symbol(self) -> char {
        match self {
            Generator::A => 'A',
            Generator::B => 'B',
        }
    }
}

/// A word over {A, B}, packed one bit per letter (A = 0, B = 1) with the
/// first letter in the highest position. Degree is the length; the empty
/// word has degree 0. The packing makes the derived order `(len, bits)`
/// exactly "ascending degree, then lexicographic with A < B", which is the
/// canonical term order everywhere in the crate.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    len: u8,
    bits: u64,
}

impl Word {
    pub const MAX_LEN: usize = 64;

    pub fn empty() -> Self {
        Word { len: 0, bits: 0 }
    }

    pub fn generator(g: Generator) -> Self {
        Word {
            len: 1,
            bits: match g {
                Generator::A => 0,
                Generator::B => 1,
            },
        }
    }

    pub fn degree(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Concatenation (the free-algebra product on basis words).
    pub fn concat(&self, other: &Word) -> Word {
        let len = self.len as usize + other.len as usize;
        assert!(len <= Self::MAX_LEN, "word length exceeds {}", Self::MAX_LEN);
        Word {
            len: len as u8,
            bits: (self.bits << other.len) | other.bits,
        }
    }

    pub fn letter(&self, i: usize) -> Generator {
        debug_assert!(i < self.len as usize);
        if (self.bits >> (self.len as usize - 1 - i)) & 1 == 1 {
            Generator::B
        } else {
            Generator::A
        }
    }

    pub fn letters(&self) -> impl Iterator<Item = Generator> + '_ {
        (0..self.len as usize).map(move |i| self.letter(i))
    }

    pub fn count(&self, g: Generator) -> usize {
        let ones = self.bits.count_ones() as usize;
        match g {
            Generator::B => ones,
            Generator::A => self.len as usize - ones,
        }
    }

    /// A^m B^n in that normal order.
    pub fn normal_ordered(a_count: usize, b_count: usize) -> Word {
        let len = a_count + b_count;
        assert!(len <= Self::MAX_LEN);
        Word {
            len: len as u8,
            bits: if b_count == 0 { 0 } else { (1u64 << b_count) - 1 },
        }
    }

    /// Number of (B, A) inversions: pairs i < j with letter i = B and
    /// letter j = A. Each adjacent BA -> qAB rewrite removes exactly one.
    pub fn inversions(&self) -> usize {
        let mut seen_b = 0usize;
        let mut inv = 0usize;
        for g in self.letters() {
            match g {
                Generator::B => seen_b += 1,
                Generator::A => inv += seen_b,
            }
        }
        inv
    }

    /// True for A^k or B^k with k = degree (k >= 1).
    pub fn is_pure(&self, g: Generator) -> bool {
        !self.is_empty() && self.count(g) == self.degree()
    }

    /// Word made of `k` copies of one generator.
    pub fn power(g: Generator, k: usize) -> Word {
        match g {
            Generator::A => Word::normal_ordered(k, 0),
            Generator::B => Word::normal_ordered(0, k),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for g in self.letters() {
            write!(f, "{}", g.symbol())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Word {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut w = Word::empty();
        for ch in s.chars() {
            let g = match ch {
                'A' => Generator::A,
                'B' => Generator::B,
                _ => return Err(format!("invalid letter `{ch}` in word")),
            };
            w = w.concat(&Word::generator(g));
        }
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_degree_then_lex() {
        let ab: Word = "AB".parse().unwrap();
        let ba: Word = "BA".parse().unwrap();
        let aaa: Word = "AAA".parse().unwrap();
        assert!(ab < ba);
        assert!(ba < aaa);
        assert!(Word::empty() < ab);
    }

    #[test]
    fn concat_and_letters() {
        let bab: Word = "BAB".parse().unwrap();
        assert_eq!(bab.degree(), 3);
        assert_eq!(bab.to_string(), "BAB");
        let ba: Word = "BA".parse().unwrap();
        let b: Word = "B".parse().unwrap();
        assert_eq!(ba.concat(&b), bab);
        assert_eq!(bab.count(Generator::B), 2);
    }

    #[test]
    fn inversions_count() {
        let w: Word = "BBA".parse().unwrap();
        assert_eq!(w.inversions(), 2);
        let w: Word = "BAB".parse().unwrap();
        assert_eq!(w.inversions(), 1);
        assert_eq!(Word::power(Generator::A, 4).inversions(), 0);
    }

    #[test]
    fn normal_ordered_words() {
        assert_eq!(Word::normal_ordered(2, 1).to_string(), "AAB");
        assert_eq!(Word::normal_ordered(0, 3).to_string(), "BBB");
        assert_eq!(Word::normal_ordered(0, 0), Word::empty());
    }
}
