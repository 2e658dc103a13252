//! Prime-field arithmetic and rank over F_p for the randomized rank oracle.

/// Fixed pool of primes between 2^50 and 2^63, two per bit length.
/// Oracle trials draw uniformly from this list.
pub const PRIMES_50_TO_62_BITS: [u64; 24] = [
    1_734_437_474_912_893,
    2_108_200_013_130_137,
    3_427_643_459_692_877,
    3_931_927_289_814_959,
    6_003_954_127_333_567,
    6_186_224_161_121_723,
    10_409_479_100_054_357,
    12_713_013_638_129_759,
    29_617_069_443_023_143,
    34_545_796_452_285_571,
    37_964_986_914_087_697,
    65_967_178_991_109_481,
    73_019_314_539_751_147,
    95_664_675_066_910_141,
    174_636_795_124_698_371,
    226_714_801_584_909_301,
    392_946_620_523_442_753,
    504_404_531_523_659_573,
    622_867_009_819_883_197,
    956_801_232_556_020_067,
    1_429_166_771_221_859_287,
    2_304_055_731_043_262_653,
    3_494_428_982_446_813_849,
    4_305_817_030_162_845_167,
];

/// Element of the field with `modulus` elements. `value` is always reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeFieldScalar {
    value: u64,
    modulus: u64,
}

impl PrimeFieldScalar {
    /// Reduces a signed integer into `[0, p)`.
    pub fn new(value: i64, modulus: u64) -> Self {
        let m = modulus as i128;
        let v = ((value as i128 % m) + m) % m;
        Self {
            value: v as u64,
            modulus,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let s = (self.value as u128 + other.value as u128) % self.modulus as u128;
        Self {
            value: s as u64,
            modulus: self.modulus,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let s = (self.value as u128 + (self.modulus - other.value) as u128)
            % self.modulus as u128;
        Self {
            value: s as u64,
            modulus: self.modulus,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let s = (self.value as u128 * other.value as u128) % self.modulus as u128;
        Self {
            value: s as u64,
            modulus: self.modulus,
        }
    }

    /// Multiplicative inverse by Fermat exponentiation; requires a prime
    /// modulus and a nonzero value.
    pub fn inv(&self) -> Self {
        assert!(self.value != 0, "zero has no inverse");
        self.pow(self.modulus - 2)
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = Self {
            value: 1,
            modulus: self.modulus,
        };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// Rank of an integer matrix over the field with `p` elements, by Gaussian
/// elimination on reduced entries.
pub fn rank_mod_p(matrix: &[Vec<i64>], p: u64) -> usize {
    let nrows = matrix.len();
    let ncols = matrix.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<PrimeFieldScalar>> = matrix
        .iter()
        .map(|r| r.iter().map(|&v| PrimeFieldScalar::new(v, p)).collect())
        .collect();

    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot_row) = (rank..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot_inv = m[rank][col].inv();
        let (top, below) = m.split_at_mut(rank + 1);
        let pivot = &top[rank];
        for row in below {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].mul(&pivot_inv);
            for (dst, src) in row.iter_mut().zip(pivot).skip(col) {
                let t = factor.mul(src);
                *dst = dst.sub(&t);
            }
        }
        rank += 1;
    }
    rank
}
