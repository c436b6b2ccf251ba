//! Integer partitions indexing Schur polynomial averages.

/// A partition: weakly decreasing positive parts, possibly empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds a partition from its parts, dropping trailing zeros.
    ///
    /// # Panics
    ///
    /// Panics if the parts are not weakly decreasing.
    pub fn new(parts: Vec<u64>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing: {parts:?}"
        );
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The hook shape (k - r, 1^r); requires r < k.
    pub fn hook(k: u64, r: u64) -> Self {
        assert!(r < k, "hook (k-r, 1^r) needs r < k, got k={k}, r={r}");
        let mut parts = vec![k - r];
        parts.extend(std::iter::repeat(1).take(r as usize));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Part at 0-based index i, zero beyond the last part.
    pub fn part(&self, i: usize) -> u64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of odd parts.
    pub fn odd_part_count(&self) -> usize {
        self.parts.iter().filter(|p| *p % 2 == 1).count()
    }

    /// All partitions with size up to `max_size` and at most `max_len`
    /// parts, the empty partition included, in no particular order.
    pub fn enumerate(max_size: u64, max_len: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn descend(
            remaining_budget: u64,
            max_part: u64,
            slots: usize,
            current: &mut Vec<u64>,
            out: &mut Vec<Partition>,
        ) {
            out.push(Partition {
                parts: current.clone(),
            });
            if slots == 0 {
                return;
            }
            let cap = max_part.min(remaining_budget);
            for next in (1..=cap).rev() {
                current.push(next);
                descend(remaining_budget - next, next, slots - 1, current, out);
                current.pop();
            }
        }
        descend(max_size, max_size, max_len, &mut current, &mut out);
        out
    }

    /// Short display such as "(3,1,1)" or "()" for the empty partition.
    pub fn display(&self) -> String {
        let inner: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        format!("({})", inner.join(","))
    }
}
