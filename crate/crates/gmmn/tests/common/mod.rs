use gmmn::exactnum::CycQ;

/// Reference S-matrix of the center at N = 3, e = 3; u stands for eta^4, v for eta^8.
const REFERENCE: [&str; 14] = [
    "1 1 3 1 4 4 4 4 4 4 3 3 3 3",
    "1 1 3 1 4u 4u 4u 4v 4v 4v 3 3 3 3",
    "3 3 -3 3 0 0 0 0 0 0 9 -3 -3 -3",
    "1 1 3 1 4v 4v 4v 4u 4u 4u 3 3 3 3",
    "4 4u 0 4v 4 4u 4v 4 4v 4u 0 0 0 0",
    "4 4u 0 4v 4u 4v 4 4v 4u 4 0 0 0 0",
    "4 4u 0 4v 4v 4 4u 4u 4 4v 0 0 0 0",
    "4 4v 0 4u 4 4v 4u 4 4u 4v 0 0 0 0",
    "4 4v 0 4u 4v 4u 4 4u 4v 4 0 0 0 0",
    "4 4v 0 4u 4u 4 4v 4v 4 4u 0 0 0 0",
    "3 3 9 3 0 0 0 0 0 0 -3 -3 -3 -3",
    "3 3 -3 3 0 0 0 0 0 0 -3 9 -3 -3",
    "3 3 -3 3 0 0 0 0 0 0 -3 -3 9 -3",
    "3 3 -3 3 0 0 0 0 0 0 -3 -3 -3 9",
];

pub fn reference_matrix() -> Vec<Vec<CycQ>> {
    let n = 36;
    // eta = zeta_36^3
    let u = CycQ::root(n, 12);
    let v = CycQ::root(n, 24);
    REFERENCE
        .iter()
        .map(|row| {
            row.split_whitespace()
                .map(|tok| {
                    let (num, unit) = match tok.strip_suffix('u') {
                        Some(x) => (x, u.clone()),
                        None => match tok.strip_suffix('v') {
                            Some(x) => (x, v.clone()),
                            None => (tok, CycQ::one(n)),
                        },
                    };
                    &CycQ::from_int(n, num.parse().unwrap()) * &unit
                })
                .collect()
        })
        .collect()
}
