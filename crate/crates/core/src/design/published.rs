//! Reference tables of non-orientable surface codes, as printed in the
//! literature for genus 5, 7, 9 and 11.
//!
//! Each table lists dual pairs `{p,q}` / `{q,p}` as consecutive rows with the
//! face count and edge length of each member, and one code record per pair.
//! The record is always the one of the member with `p < q`, whichever row it
//! is printed on. Values are kept verbatim, typos included.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PublishedRecord {
    pub n: u64,
    pub k: u64,
    pub d_z: u32,
    pub d_x: u32,
    /// Printed as `[n, k, d_z/d_x]` instead of `[[...]]`.
    pub single_bracket: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PublishedRow {
    pub p: u32,
    pub q: u32,
    pub n_f: u64,
    pub l_pq: f64,
    /// Record printed on this row, if any.
    pub record: Option<PublishedRecord>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PublishedTable {
    pub number: u8,
    /// Non-orientable genus.
    pub genus: u32,
    pub d_h: f64,
    pub rows: &'static [PublishedRow],
}

impl PublishedTable {
    /// Rows grouped into dual pairs, in printed order.
    pub fn pairs(&self) -> impl Iterator<Item = (&PublishedRow, &PublishedRow)> {
        self.rows.chunks_exact(2).map(|c| (&c[0], &c[1]))
    }
}

const fn row(p: u32, q: u32, n_f: u64, l_pq: f64) -> PublishedRow {
    PublishedRow {
        p,
        q,
        n_f,
        l_pq,
        record: None,
    }
}

#[allow(clippy::too_many_arguments)]
const fn rec(p: u32, q: u32, n_f: u64, l_pq: f64, n: u64, k: u64, d_z: u32, d_x: u32) -> PublishedRow {
    PublishedRow {
        p,
        q,
        n_f,
        l_pq,
        record: Some(PublishedRecord {
            n,
            k,
            d_z,
            d_x,
            single_bracket: false,
        }),
    }
}

const TABLE_1: [PublishedRow; 18] = [
    rec(3, 7, 42, 1.0905, 63, 5, 7, 4),
    row(7, 3, 18, 0.5663),
    rec(3, 8, 24, 1.5286, 36, 5, 5, 3),
    row(8, 3, 9, 0.7270),
    rec(3, 9, 18, 1.8551, 27, 5, 5, 2),
    row(9, 3, 6, 0.8192),
    rec(3, 12, 12, 2.5534, 18, 5, 4, 2),
    row(12, 3, 3, 0.9516),
    rec(3, 15, 10, 3.0486, 15, 5, 4, 2),
    row(15, 3, 2, 1.0070),
    rec(4, 5, 15, 1.2537, 30, 5, 4, 3),
    row(5, 4, 12, 1.0613),
    rec(4, 7, 7, 2.1408, 14, 5, 3, 2),
    row(7, 4, 4, 1.4491),
    rec(4, 8, 6, 2.4485, 12, 5, 3, 2),
    row(8, 4, 3, 1.5286),
    rec(4, 10, 5, 2.9387, 10, 5, 3, 2),
    row(10, 4, 2, 1.6169),
];

const TABLE_2: [PublishedRow; 24] = [
    rec(3, 7, 70, 1.0905, 105, 7, 8, 4),
    row(7, 3, 30, 0.5663),
    rec(3, 8, 40, 1.5286, 60, 7, 6, 3),
    row(8, 3, 15, 0.7270),
    rec(3, 9, 30, 1.8551, 45, 7, 6, 3),
    row(9, 3, 10, 0.8192),
    rec(3, 11, 22, 2.3517, 33, 7, 5, 2),
    row(11, 3, 6, 0.9210),
    rec(3, 12, 20, 2.5534, 30, 7, 5, 2),
    row(12, 3, 5, 0.9516),
    rec(3, 16, 16, 3.1877, 24, 7, 5, 2),
    row(16, 3, 3, 1.0186),
    rec(3, 21, 14, 3.7611, 21, 7, 4, 2),
    row(21, 3, 2, 1.0529),
    rec(4, 5, 25, 1.2537, 50, 7, 5, 4),
    row(5, 4, 20, 1.0613),
    row(4, 6, 15, 1.7627),
    rec(6, 4, 10, 1.3170, 30, 7, 4, 3),
    row(4, 8, 10, 2.4485),
    rec(8, 4, 5, 1.5286, 20, 7, 3, 2),
    row(4, 9, 9, 2.7101),
    rec(9, 4, 4, 1.5807, 18, 7, 3, 2),
    row(4, 14, 7, 3.6472),
    rec(14, 4, 2, 1.6900, 14, 7, 3, 2),
];

const TABLE_3: [PublishedRow; 28] = [
    row(3, 7, 98, 1.0905),
    rec(7, 3, 42, 0.5663, 147, 9, 9, 5),
    row(3, 8, 56, 1.5286),
    rec(8, 3, 21, 0.7270, 84, 9, 7, 4),
    row(3, 9, 42, 1.8551),
    rec(9, 3, 14, 0.8192, 63, 9, 6, 3),
    row(3, 12, 28, 2.5534),
    rec(12, 3, 7, 0.9516, 42, 9, 6, 2),
    row(3, 13, 26, 2.7341),
    rec(13, 3, 6, 0.9748, 39, 9, 5, 2),
    row(3, 20, 20, 3.6594),
    rec(20, 3, 3, 1.0481, 30, 9, 5, 2),
    row(3, 27, 18, 4.2792),
    PublishedRow {
        p: 27,
        q: 3,
        n_f: 2,
        l_pq: 1.0712,
        record: Some(PublishedRecord {
            n: 27,
            k: 9,
            d_z: 5,
            d_x: 2,
            single_bracket: true,
        }),
    },
    row(4, 5, 35, 1.2537),
    rec(5, 4, 28, 1.0613, 70, 9, 5, 4),
    row(4, 6, 21, 1.7627),
    rec(6, 4, 14, 1.3170, 42, 9, 4, 3),
    row(4, 8, 14, 2.4485),
    rec(8, 4, 7, 1.5286, 28, 9, 4, 2),
    row(4, 11, 11, 3.1422),
    rec(11, 4, 4, 1.6432, 22, 9, 3, 2),
    row(4, 18, 9, 4.1637),
    rec(18, 4, 2, 1.7191, 18, 9, 3, 2),
    row(5, 8, 8, 2.7609),
    rec(8, 5, 5, 2.0481, 20, 9, 3, 2),
    row(5, 15, 6, 4.0698),
    rec(15, 5, 2, 2.1934, 15, 9, 3, 2),
];

const TABLE_4: [PublishedRow; 30] = [
    rec(3, 7, 126, 1.0905, 189, 11, 10, 5),
    row(7, 3, 54, 0.5663),
    rec(3, 8, 72, 1.5286, 108, 11, 8, 4),
    row(8, 3, 27, 0.7270),
    rec(3, 9, 54, 1.8551, 81, 11, 7, 3),
    row(9, 3, 18, 0.8192),
    rec(3, 12, 36, 2.5534, 54, 11, 6, 3),
    row(12, 3, 9, 0.9516),
    rec(3, 15, 30, 3.0486, 45, 11, 6, 2),
    row(15, 3, 6, 1.0070),
    rec(3, 24, 24, 4.0374, 36, 11, 5, 2),
    row(24, 3, 3, 1.0638),
    rec(3, 33, 22, 4.6883, 33, 11, 5, 2),
    row(33, 3, 2, 1.0803),
    rec(4, 6, 27, 1.7627, 54, 11, 4, 3),
    row(6, 4, 18, 1.3170),
    rec(4, 7, 21, 2.1408, 42, 11, 4, 3),
    row(7, 4, 12, 1.4491),
    rec(4, 8, 18, 2.4485, 36, 11, 4, 3),
    row(8, 4, 9, 1.5286),
    rec(4, 10, 15, 2.9387, 30, 11, 4, 2),
    row(10, 4, 6, 1.6169),
    rec(4, 13, 13, 3.4932, 26, 11, 4, 2),
    row(13, 4, 4, 1.6780),
    rec(4, 16, 12, 3.9225, 24, 11, 4, 2),
    row(16, 4, 3, 1.7073),
    rec(4, 22, 11, 4.5720, 22, 11, 4, 2),
    row(22, 4, 2, 1.7337),
    rec(6, 12, 6, 3.7556, 18, 11, 3, 2),
    row(12, 6, 3, 2.5534),
];

pub static TABLES: [PublishedTable; 4] = [
    PublishedTable {
        number: 1,
        genus: 5,
        d_h: 3.5796,
        rows: &TABLE_1,
    },
    PublishedTable {
        number: 2,
        genus: 7,
        d_h: 4.3144,
        rows: &TABLE_2,
    },
    PublishedTable {
        number: 3,
        genus: 9,
        d_h: 4.8414,
        rows: &TABLE_3,
    },
    PublishedTable {
        number: 4,
        genus: 11,
        d_h: 5.2548,
        rows: &TABLE_4,
    },
];

pub fn table(number: u8) -> Option<&'static PublishedTable> {
    TABLES.iter().find(|t| t.number == number)
}
