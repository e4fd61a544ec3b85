//! Reference tables and small-order enumeration used by the verification
//! suites and tests.

use crate::algebra::CayleyTable;

/// The cyclic group of order `n` as a Cayley table.
pub fn cyclic_group(n: usize) -> CayleyTable {
    CayleyTable::from_fn(n, |x, y| (x + y) % n).expect("cyclic table is well formed")
}

/// The Klein four-group (C2 x C2).
pub fn klein_four() -> CayleyTable {
    CayleyTable::from_fn(4, |x, y| x ^ y).expect("klein table is well formed")
}

/// The symmetric group on three letters, elements being the six
/// permutations of `{0,1,2}` in lexicographic order, multiplied left to
/// right (right action).
pub fn symmetric_group_3() -> CayleyTable {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let index_of = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    CayleyTable::from_fn(6, |i, j| {
        let (p, q) = (perms[i], perms[j]);
        index_of([q[p[0]], q[p[1]], q[p[2]]])
    })
    .expect("s3 table is well formed")
}

/// All loop tables of order `n` with identity element 0 — equivalently all
/// reduced Latin squares (first row and first column in natural order).
/// Every loop of order `n` is isomorphic to one of these. Counts for
/// n = 1..6: 1, 1, 1, 4, 56, 9408.
pub fn loops_of_order(n: usize) -> Vec<CayleyTable> {
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![CayleyTable::from_rows(vec![vec![0]]).unwrap()];
    }
    let mut cells = vec![0usize; n * n];
    for x in 0..n {
        cells[x] = x; // first row
        cells[x * n] = x; // first column
    }
    let mut col_used = vec![vec![false; n]; n];
    let mut row_used = vec![vec![false; n]; n];
    for x in 0..n {
        col_used[x][x] = true;
        row_used[x][x] = true;
        col_used[0][x] = true;
        row_used[0][x] = true;
    }
    // cell order: row major over rows 1.., columns 1..
    let mut out = Vec::new();
    fill(n, 1, 1, &mut cells, &mut row_used, &mut col_used, &mut out);
    out
}

fn fill(
    n: usize,
    r: usize,
    c: usize,
    cells: &mut Vec<usize>,
    row_used: &mut Vec<Vec<bool>>,
    col_used: &mut Vec<Vec<bool>>,
    out: &mut Vec<CayleyTable>,
) {
    if r == n {
        out.push(
            CayleyTable::from_rows((0..n).map(|x| cells[x * n..(x + 1) * n].to_vec()).collect())
                .expect("enumerated square is well formed"),
        );
        return;
    }
    let (nr, nc) = if c + 1 == n { (r + 1, 1) } else { (r, c + 1) };
    for v in 0..n {
        if row_used[r][v] || col_used[c][v] {
            continue;
        }
        cells[r * n + c] = v;
        row_used[r][v] = true;
        col_used[c][v] = true;
        fill(n, nr, nc, cells, row_used, col_used, out);
        row_used[r][v] = false;
        col_used[c][v] = false;
    }
}
