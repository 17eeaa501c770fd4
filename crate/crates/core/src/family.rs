//! Exhaustive enumeration of small ultimately periodic streams.

use std::collections::BTreeSet;

use crate::stream::{Color, UpStream};

/// All words over {R, B} of length exactly `len`, in lexicographic order
/// with `R < B`.
pub fn words(len: usize) -> impl Iterator<Item = Vec<Color>> {
    (0..1usize << len).map(move |bits| {
        (0..len)
            .map(|i| {
                if bits >> (len - 1 - i) & 1 == 0 {
                    Color::Red
                } else {
                    Color::Blue
                }
            })
            .collect()
    })
}

/// Every canonical stream whose canonical form has `|prefix| ≤ max_prefix`
/// and `|cycle| ≤ max_cycle`, deduplicated, sorted by literal.
pub fn canonical_family(max_prefix: usize, max_cycle: usize) -> Vec<UpStream> {
    let mut seen = BTreeSet::new();
    for p in 0..=max_prefix {
        for c in 1..=max_cycle {
            for prefix in words(p) {
                for cycle in words(c) {
                    let s = UpStream::new(prefix.clone(), cycle)
                        .expect("cycle is nonempty")
                        .canonicalize();
                    seen.insert(s.to_string());
                }
            }
        }
    }
    seen.into_iter()
        .map(|lit| lit.parse().expect("formatted literal parses"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_enumerates_all() {
        assert_eq!(words(0).count(), 1);
        assert_eq!(words(3).count(), 8);
        let all: BTreeSet<_> = words(4).collect();
        assert_eq!(all.len(), 16);
    }

    #[test]
    fn family_is_canonical_and_unique() {
        let fam = canonical_family(2, 2);
        assert!(fam.iter().all(UpStream::is_canonical));
        let literals: BTreeSet<_> = fam.iter().map(ToString::to_string).collect();
        assert_eq!(literals.len(), fam.len());
        // cycles: R, B, RB, BR; prefixes of length ≤ 2 whose last letter
        // differs from the last cycle letter
        assert!(literals.contains("(RB)") && literals.contains("(BR)"));
        assert!(literals.contains("BR(B)") && !literals.contains("B(B)"));
    }
}
