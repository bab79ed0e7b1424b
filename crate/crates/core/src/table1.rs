//! Published minimal-entropy words for lengths 1 to 40, used as golden data.

/// One length: the achieving words (one per symmetry class), their common
/// `maxocc`, and the published run counts (the second word at n = 19 has none).
#[derive(Clone, Copy, Debug)]
pub struct GoldenRow {
    pub n: usize,
    pub words: &'static [&'static str],
    pub maxocc: u64,
    pub runs: &'static [usize],
}

macro_rules! row {
    ($n:expr, [$($w:expr),+], $m:expr, [$($r:expr),+]) => {
        GoldenRow { n: $n, words: &[$($w),+], maxocc: $m, runs: &[$($r),+] }
    };
}

pub const GOLDEN: &[GoldenRow] = &[
    row!(1, ["0"], 1, [1]),
    row!(2, ["01"], 1, [2]),
    row!(3, ["001", "010"], 2, [2, 3]),
    row!(4, ["0110"], 2, [3]),
    row!(5, ["01110"], 3, [3]),
    row!(6, ["011001"], 5, [4]),
    row!(7, ["0110001"], 6, [4]),
    row!(8, ["01110001"], 9, [4]),
    row!(9, ["011000110"], 16, [5]),
    row!(10, ["0110001110"], 22, [5]),
    row!(11, ["01110001110"], 33, [5]),
    row!(12, ["011000111001"], 52, [6]),
    row!(13, ["0111001001110"], 72, [7]),
    row!(14, ["01100010111001"], 108, [8]),
    row!(15, ["011000101110001"], 162, [8]),
    row!(16, ["0111000101110001"], 252, [8]),
    row!(17, ["01100011111000110"], 390, [7]),
    row!(18, ["011100100101110001"], 588, [10]),
    row!(19, ["0110001011101000110", "0110001110110001110"], 900, [11]),
    row!(20, ["01110001011011000110"], 1320, [11]),
    row!(21, ["011100011011010001110"], 2049, [11]),
    row!(22, ["0110001110101000111001"], 2958, [12]),
    row!(23, ["01110001011011010001110"], 4473, [13]),
    row!(24, ["011000111010101000111001"], 6979, [14]),
    row!(25, ["0111000101101101000111001"], 10602, [14]),
    row!(26, ["01110001011011001000111001"], 15962, [14]),
    row!(27, ["011100010101110101000111001"], 24150, [16]),
    row!(28, ["0110001111010010010111000110", "0111000101110101000101110001"], 36450, [15, 16]),
    row!(29, ["01100011101010001010111000110"], 53671, [17]),
    row!(30, ["011000111001100010101111000110"], 83862, [15]),
    row!(31, ["0110001110101000101011110001110"], 127998, [17]),
    row!(32, ["01100011101010001010111010001110"], 189131, [19]),
    row!(33, ["011000111101010001011011010001110"], 288900, [19]),
    row!(34, ["0110001110101000101011101001001110"], 442386, [21]),
    row!(35, ["01110001011011001000110111001001110"], 681966, [19]),
    row!(36, ["011100010111010100010110111001001110"], 1047330, [21]),
    row!(37, ["0111000101101011000011011011010001110"], 1581150, [21]),
    row!(38, ["01110001011011011000100111011001001110"], 2387054, [21]),
    row!(39, ["011000110110010011101100010010111000110"], 3626580, [21]),
    row!(40, ["0110001110101000101011101010001110010110"], 5500610, [25]),
];

/// Published most frequent subwords for lengths up to 16. Entries may be a
/// symmetric variant of a subword rather than the subword itself.
pub const GOLDEN_SUBWORDS: &[(&str, &[&str])] = &[
    ("0", &["0"]),
    ("01", &["01"]),
    ("001", &["0", "01"]),
    ("010", &["0"]),
    ("0110", &["0"]),
    ("01110", &["010", "0110"]),
    ("011001", &["01"]),
    ("0110001", &["01", "001", "0101", "01001"]),
    ("01110001", &["0101", "01001", "011001"]),
    ("011000110", &["010"]),
    ("0110001110", &["0110"]),
    ("01110001110", &["0110"]),
    ("011000111001", &["0101"]),
    ("0111001001110", &["01010", "010010", "010110", "0100110", "0110110", "01100110"]),
    ("01100010111001", &["010101", "0100101", "01001101"]),
    ("011000101110001", &["0101101", "01001101", "01011001", "010011001"]),
    ("0111000101110001", &["011001"]),
];

pub fn golden_row(n: usize) -> Option<&'static GoldenRow> {
    GOLDEN.iter().find(|r| r.n == n)
}
