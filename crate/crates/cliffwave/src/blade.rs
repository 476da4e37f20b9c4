//! Basis blades encoded as bitmasks.
//!
//! Bit `j` of the mask marks the generator `e_j` (zero-based). The canonical
//! blade is the product of its generators in increasing index order, so the
//! mask determines the blade completely and the geometric product of two
//! blades reduces to an XOR plus a sign.

/// A basis blade of `Cl_m`, canonical (sorted) generator order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BladeIndex(pub u32);

impl BladeIndex {
    pub const SCALAR: BladeIndex = BladeIndex(0);

    pub fn generator(j: u32) -> Self {
        BladeIndex(1 << j)
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, j: u32) -> bool {
        self.0 & (1 << j) != 0
    }

    pub fn generators(self) -> impl Iterator<Item = u32> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let j = bits.trailing_zeros();
                bits &= bits - 1;
                Some(j)
            }
        })
    }

    /// Number of transpositions needed to interleave the sorted generator
    /// sequences of `self` and `rhs`; counts pairs (i in self, j in rhs)
    /// with i > j.
    fn reorder_swaps(self, rhs: BladeIndex) -> u32 {
        let mut swaps = 0;
        let mut a = self.0 >> 1;
        while a != 0 {
            swaps += (a & rhs.0).count_ones();
            a >>= 1;
        }
        swaps
    }

    /// Product of two canonical blades under e_j^2 = -1, e_i e_j = -e_j e_i.
    ///
    /// Returns the resulting blade and the sign (+1/-1). Each shared
    /// generator squares to -1 on elimination.
    pub fn product(self, rhs: BladeIndex) -> (BladeIndex, i8) {
        let swaps = self.reorder_swaps(rhs);
        let squared = (self.0 & rhs.0).count_ones();
        let sign = if (swaps + squared).is_multiple_of(2) { 1 } else { -1 };
        (BladeIndex(self.0 ^ rhs.0), sign)
    }

    /// Sign of the main anti-involution on this blade: reverse the generator
    /// order and negate each generator, i.e. (-1)^(k(k+1)/2) for grade k.
    pub fn bar_sign(self) -> i8 {
        let k = self.grade();
        if (k * (k + 1) / 2).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn label(self) -> String {
        if self.0 == 0 {
            return "1".to_string();
        }
        let mut s = String::from("e");
        for j in self.generators() {
            s.push_str(&j.to_string());
        }
        s
    }

    pub fn all(dim: u32) -> impl Iterator<Item = BladeIndex> {
        (0u32..(1 << dim)).map(BladeIndex)
    }
}
