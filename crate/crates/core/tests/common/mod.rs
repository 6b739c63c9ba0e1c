#![allow(dead_code)]

use hwface::rational::frac;
use hwface::{CoordClass, ModuleSpec, NodeSet, RootSystem};

pub const RANK_LE_3: &[&str] = &[
    "A1", "A1xA1", "A1xA1xA1", "A2", "B2", "G2", "A3", "B3", "C3", "A2xA1", "B2xA1", "G2xA1",
];

/// The four coordinate samples: zero, two dominant integral values and a
/// non-integral one.
pub fn classes() -> Vec<CoordClass> {
    vec![
        CoordClass::Zero,
        CoordClass::DominantIntegral(Some(1)),
        CoordClass::DominantIntegral(Some(2)),
        CoordClass::NonIntegralNonzero(Some(frac(-1, 2))),
    ]
}

/// Every assignment of `classes()` to the nodes and every `J(V) ⊆ J_λ`.
pub fn sweep(types: &str) -> Vec<ModuleSpec> {
    let rs = RootSystem::parse(types).unwrap();
    let n = rs.rank();
    let cls = classes();
    let mut out = Vec::new();
    let total = cls.len().pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let lambda: Vec<CoordClass> = (0..n)
            .map(|_| {
                let x = cls[c % cls.len()].clone();
                c /= cls.len();
                x
            })
            .collect();
        let j_lambda: NodeSet = (0..n)
            .filter(|&i| lambda[i].is_integral())
            .fold(NodeSet::EMPTY, |s, i| s.with(i));
        for jv in j_lambda.subsets() {
            out.push(ModuleSpec::new(rs.clone(), lambda.clone(), jv, true).unwrap());
        }
    }
    out
}

pub fn sweep_all(types: &[&str]) -> Vec<ModuleSpec> {
    types.iter().flat_map(|t| sweep(t)).collect()
}
