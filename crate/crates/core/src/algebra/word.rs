//! Packed basis words.
//!
//! A word of length `n <= MAX_DEGREE` over the letters `0..2g` is stored in a
//! `u64`, eight bits per letter, with letter `i` of the word at bits `8i..8i+8`.
//! The length is not stored; it is always known from the graded component the
//! word lives in.

pub type Word = u64;

const BITS: u32 = 8;
const MASK: u64 = 0xff;

pub fn pack(letters: &[usize]) -> Word {
    debug_assert!(letters.len() <= super::MAX_DEGREE);
    letters
        .iter()
        .enumerate()
        .fold(0, |w, (i, &l)| w | ((l as u64 & MASK) << (BITS * i as u32)))
}

pub fn unpack(w: Word, len: usize) -> Vec<usize> {
    (0..len).map(|i| letter(w, i)).collect()
}

pub fn letter(w: Word, i: usize) -> usize {
    ((w >> (BITS * i as u32)) & MASK) as usize
}

/// Concatenation `w1 w2` where `w1` has length `len1`.
pub fn concat(w1: Word, len1: usize, w2: Word) -> Word {
    if len1 == 0 {
        w2
    } else {
        w1 | (w2 << (BITS * len1 as u32))
    }
}

/// Splits off the first letter: `(first, rest)`.
pub fn split_first(w: Word) -> (usize, Word) {
    ((w & MASK) as usize, w >> BITS)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pack_round_trip() {
        let letters = vec![3, 0, 5, 1];
        let w = pack(&letters);
        assert_eq!(unpack(w, 4), letters);
        assert_eq!(letter(w, 2), 5);
        assert_eq!(split_first(w), (3, pack(&[0, 5, 1])));
    }

    #[test]
    fn concatenation() {
        let a = pack(&[1, 2]);
        let b = pack(&[3]);
        assert_eq!(unpack(concat(a, 2, b), 3), vec![1, 2, 3]);
        assert_eq!(concat(0, 0, b), b);
    }
}
