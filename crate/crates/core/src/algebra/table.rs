//! Octonion multiplication table generated from the seven oriented
//! quaternionic triples of the Fano plane.
//!
//! `e_i e_j = -delta_ij + psi_ijk e_k` with `psi` totally antisymmetric and
//! equal to one on each triple below (and its cyclic rotations).

/// The oriented triples `(i, j, k)` with `e_i e_j = e_k`.
pub const FANO_TRIPLES: [(usize, usize, usize); 7] = [
    (1, 2, 3),
    (1, 4, 5),
    (2, 4, 6),
    (3, 4, 7),
    (5, 3, 6),
    (6, 1, 7),
    (7, 2, 5),
];

/// `e_i e_j = SIGN[i][j] * e_{INDEX[i][j]}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MulTable {
    pub index: [[usize; 8]; 8],
    pub sign: [[i8; 8]; 8],
}

const fn build() -> MulTable {
    let mut index = [[0usize; 8]; 8];
    let mut sign = [[0i8; 8]; 8];

    let mut i = 0;
    while i < 8 {
        // 1 is a two-sided unit.
        index[0][i] = i;
        sign[0][i] = 1;
        index[i][0] = i;
        sign[i][0] = 1;
        i += 1;
    }
    let mut i = 1;
    while i < 8 {
        index[i][i] = 0;
        sign[i][i] = -1;
        i += 1;
    }

    let mut t = 0;
    while t < FANO_TRIPLES.len() {
        let (a, b, c) = FANO_TRIPLES[t];
        let cyc = [(a, b, c), (b, c, a), (c, a, b)];
        let mut r = 0;
        while r < 3 {
            let (p, q, s) = cyc[r];
            index[p][q] = s;
            sign[p][q] = 1;
            index[q][p] = s;
            sign[q][p] = -1;
            r += 1;
        }
        t += 1;
    }
    MulTable { index, sign }
}

/// The table, built at compile time.
pub const TABLE: MulTable = build();

/// `psi_ijk` for imaginary indices `1..=7`; zero when `i, j, k` is not a line.
pub fn psi(i: usize, j: usize, k: usize) -> i8 {
    if i == 0 || j == 0 || k == 0 || i == j || TABLE.index[i][j] != k {
        return 0;
    }
    TABLE.sign[i][j]
}
