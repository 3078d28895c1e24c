//! Built-in golden checks: the library's worked reference examples over
//! the ring with p = 5, s = 4, frozen value by value. `verify-paper`
//! replays all of them and fails loudly on any mismatch.

use ringcodes::{
    factor_xn_minus_1, CyclicGenerators, Prime, Ring, RingLinearCode, RingMatrix, ZpPoly,
};

pub struct GoldenItem {
    pub name: &'static str,
    pub run: fn() -> Result<(), String>,
}

pub fn items() -> Vec<GoldenItem> {
    vec![
        GoldenItem {
            name: "idempotent set of the reference ring",
            run: idempotents,
        },
        GoldenItem {
            name: "linear code example one: decomposition and distances",
            run: example_one,
        },
        GoldenItem {
            name: "linear code example two: distances and MDS",
            run: example_two,
        },
        GoldenItem {
            name: "dual codes of both examples",
            run: duals,
        },
        GoldenItem {
            name: "cyclic codes of lengths four and five",
            run: cyclic,
        },
    ]
}

fn check<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

fn ring() -> Result<Ring, String> {
    Ring::new(5, 4).map_err(|e| e.to_string())
}

fn p5() -> Prime {
    Prime::new(5).expect("5 is prime")
}

fn element(ring: &Ring, coeffs: &[u64]) -> ringcodes::RingElement {
    ring.element(coeffs).expect("golden data has ring length")
}

/// Generator matrix of example one, ascending coefficients per entry.
fn generator_one(ring: &Ring) -> RingMatrix {
    let rows = vec![
        vec![
            element(ring, &[1, 0, 0, 0]),
            element(ring, &[0, 0, 0, 0]),
            element(ring, &[0, 0, 0, 0]),
            element(ring, &[1, 2, 3, 1]), // u^3+3u^2+2u+1
            element(ring, &[1, 4, 1, 1]), // u^3+u^2+4u+1
        ],
        vec![
            element(ring, &[0, 0, 0, 0]),
            element(ring, &[1, 0, 0, 0]),
            element(ring, &[0, 0, 0, 0]),
            element(ring, &[2, 4, 3, 3]), // 3u^3+3u^2+4u+2
            element(ring, &[0, 1, 1, 2]), // 2u^3+u^2+u
        ],
        vec![
            element(ring, &[0, 0, 0, 0]),
            element(ring, &[0, 0, 0, 0]),
            element(ring, &[1, 0, 0, 0]),
            element(ring, &[0, 2, 4, 4]), // 4u^3+4u^2+2u
            element(ring, &[3, 1, 2, 4]), // 4u^3+2u^2+u+3
        ],
    ];
    RingMatrix::from_rows(ring, rows).expect("golden matrix is well formed")
}

fn generator_two(ring: &Ring) -> RingMatrix {
    let s = |c: u64| {
        let mut v = vec![0, 0, 0, 0];
        v[0] = c;
        element(ring, &v)
    };
    let rows = vec![
        vec![s(1), s(0), s(0), s(1), s(1)],
        vec![s(0), s(1), s(0), s(1), s(2)],
        vec![
            s(0),
            s(0),
            s(1),
            element(ring, &[1, 3, 4, 3]), // 3u^3+4u^2+3u+1
            element(ring, &[3, 1, 1, 4]), // 4u^3+u^2+u+3
        ],
    ];
    RingMatrix::from_rows(ring, rows).expect("golden matrix is well formed")
}

const COMPONENTS_ONE: [[[u64; 5]; 3]; 4] = [
    [[1, 0, 0, 1, 1], [0, 1, 0, 2, 0], [0, 0, 1, 0, 3]],
    [[1, 0, 0, 2, 2], [0, 1, 0, 2, 4], [0, 0, 1, 0, 0]],
    [[1, 0, 0, 0, 1], [0, 1, 0, 1, 2], [0, 0, 1, 2, 0]],
    [[1, 0, 0, 1, 4], [0, 1, 0, 2, 1], [0, 0, 1, 0, 2]],
];

const COMPONENTS_TWO: [[[u64; 5]; 3]; 4] = [
    [[1, 0, 0, 1, 1], [0, 1, 0, 1, 2], [0, 0, 1, 1, 3]],
    [[1, 0, 0, 1, 1], [0, 1, 0, 1, 2], [0, 0, 1, 1, 4]],
    [[1, 0, 0, 1, 1], [0, 1, 0, 1, 2], [0, 0, 1, 2, 1]],
    [[1, 0, 0, 1, 1], [0, 1, 0, 1, 2], [0, 0, 1, 2, 3]],
];

const PARITY_ONE: [[[u64; 5]; 2]; 4] = [
    [[4, 3, 0, 1, 0], [4, 0, 2, 0, 1]],
    [[3, 3, 0, 1, 0], [3, 1, 0, 0, 1]],
    [[0, 4, 3, 1, 0], [4, 3, 0, 0, 1]],
    [[4, 3, 0, 1, 0], [1, 4, 3, 0, 1]],
];

const PARITY_TWO: [[[u64; 5]; 2]; 4] = [
    [[4, 4, 4, 1, 0], [4, 3, 2, 0, 1]],
    [[4, 4, 4, 1, 0], [4, 3, 1, 0, 1]],
    [[4, 4, 3, 1, 0], [4, 3, 4, 0, 1]],
    [[4, 4, 3, 1, 0], [4, 3, 2, 0, 1]],
];

/// Composed dual matrix of example one, ascending coefficients per entry.
const RING_PARITY_ONE: [[[u64; 4]; 5]; 2] = [
    [
        [4, 3, 2, 4], // 4u^3+2u^2+3u+4
        [3, 1, 2, 2], // 2u^3+2u^2+u+3
        [0, 3, 1, 1], // u^3+u^2+3u
        [1, 0, 0, 0],
        [0, 0, 0, 0],
    ],
    [
        [4, 1, 4, 4], // 4u^3+4u^2+u+4, the entry left unexpanded at source
        [0, 4, 4, 3], // 3u^3+4u^2+4u
        [2, 4, 3, 1], // u^3+3u^2+4u+2
        [0, 0, 0, 0],
        [1, 0, 0, 0],
    ],
];

const RING_PARITY_TWO: [[[u64; 4]; 5]; 2] = [
    [
        [4, 0, 0, 0],
        [4, 0, 0, 0],
        [4, 2, 1, 2], // 2u^3+u^2+2u+4
        [1, 0, 0, 0],
        [0, 0, 0, 0],
    ],
    [
        [4, 0, 0, 0],
        [3, 0, 0, 0],
        [2, 4, 4, 1], // u^3+4u^2+4u+2
        [0, 0, 0, 0],
        [1, 0, 0, 0],
    ],
];

fn idempotents() -> Result<(), String> {
    let ring = ring()?;
    // expansions and factored forms: weight * product of (u - root)
    let golden: [(u64, [u64; 4], u64, [u64; 3]); 4] = [
        (0, [1, 4, 1, 4], 4, [1, 2, 3]),
        (1, [0, 3, 0, 3], 3, [0, 2, 3]),
        (2, [0, 1, 2, 2], 2, [0, 1, 3]),
        (3, [0, 2, 2, 1], 1, [0, 1, 2]),
    ];
    for (root, expanded, weight, others) in golden {
        let alpha = ring.idempotent(root).map_err(|e| e.to_string())?;
        check(
            &format!("idempotent at root {root}"),
            alpha.coeffs(),
            &expanded,
        )?;
        check(
            &format!("normalizing weight at root {root}"),
            ring.lagrange_weight(root).map_err(|e| e.to_string())?,
            weight,
        )?;
        let product = ZpPoly::from_roots(p5(), &others).scale(weight);
        check(
            &format!("factored form at root {root}"),
            ring.element_from_poly(&product).coeffs(),
            &expanded,
        )?;
    }
    // idempotence, orthogonality and partition of unity across all small rings
    for p in [2u64, 3, 5, 7, 11, 13] {
        for s in 0..p {
            let ring = Ring::new(p, s).map_err(|e| e.to_string())?;
            let alphas = ring.idempotents();
            let mut total = ring.zero();
            for (i, a) in alphas.iter().enumerate() {
                if &a.mul(a) != a {
                    return Err(format!("p={p} s={s}: idempotence fails at {i}"));
                }
                for (j, b) in alphas.iter().enumerate() {
                    if i != j && !a.mul(b).is_zero() {
                        return Err(format!("p={p} s={s}: orthogonality fails at {i},{j}"));
                    }
                }
                total = total.add(a);
            }
            if !total.is_one() {
                return Err(format!("p={p} s={s}: idempotents do not sum to one"));
            }
        }
    }
    Ok(())
}

fn check_decomposition(g: &RingMatrix, want: &[[[u64; 5]; 3]; 4]) -> Result<(), String> {
    for (k, part) in g.decompose().iter().enumerate() {
        let rows: Vec<Vec<u64>> = want[k].iter().map(|r| r.to_vec()).collect();
        check(&format!("component matrix {k}"), part.row_vecs(), rows)?;
    }
    Ok(())
}

fn example_one() -> Result<(), String> {
    let ring = ring()?;
    let g = generator_one(&ring);
    check_decomposition(&g, &COMPONENTS_ONE)?;
    let code = RingLinearCode::from_generator(&g);
    let report = code.distance_report().map_err(|e| e.to_string())?;
    let dists: Vec<usize> = report
        .per_component
        .iter()
        .map(|d| d.as_ref().map(|d| d.distance).unwrap_or(0))
        .collect();
    check("component distances", dists, vec![2, 1, 2, 2])?;
    check("minimum distance", report.distance, 1)?;
    Ok(())
}

fn example_two() -> Result<(), String> {
    let ring = ring()?;
    let g = generator_two(&ring);
    check_decomposition(&g, &COMPONENTS_TWO)?;
    let code = RingLinearCode::from_generator(&g);
    let report = code.distance_report().map_err(|e| e.to_string())?;
    for (k, d) in report.per_component.iter().enumerate() {
        check(
            &format!("component {k} distance"),
            d.as_ref().map(|d| d.distance),
            Some(3),
        )?;
    }
    check("minimum distance", report.distance, 3)?;
    for comp in code.components() {
        if !comp.is_mds().map_err(|e| e.to_string())? {
            return Err(format!("component {} is not MDS", comp.index()));
        }
    }
    Ok(())
}

fn duals() -> Result<(), String> {
    let ring = ring()?;
    for (tag, g, parity, ring_parity) in [
        ("one", generator_one(&ring), PARITY_ONE, RING_PARITY_ONE),
        ("two", generator_two(&ring), PARITY_TWO, RING_PARITY_TWO),
    ] {
        let code = RingLinearCode::from_generator(&g);
        let dual = code.dual().map_err(|e| e.to_string())?;
        for (k, comp) in dual.components().iter().enumerate() {
            let rows: Vec<Vec<u64>> = parity[k].iter().map(|r| r.to_vec()).collect();
            check(
                &format!("example {tag} parity check {k}"),
                comp.generator().row_vecs(),
                rows,
            )?;
        }
        let h = code.dual_matrix().map_err(|e| e.to_string())?;
        for (i, row) in ring_parity.iter().enumerate() {
            for (j, want) in row.iter().enumerate() {
                check(
                    &format!("example {tag} ring dual entry ({i},{j})"),
                    h.get(i, j).coeffs(),
                    want,
                )?;
            }
        }
        if !g.matmul(&h.transpose()).is_zero() {
            return Err(format!("example {tag}: G * H^T is not zero"));
        }
    }
    Ok(())
}

fn cyclic() -> Result<(), String> {
    let ring = ring()?;
    // length four: factors x-1 .. x-4, generators (x-2, x-3, (x-1)(x-2), x-4)
    let f4 = factor_xn_minus_1(p5(), 4).map_err(|e| e.to_string())?;
    let roots: Vec<(u64, u32)> = f4
        .factors()
        .iter()
        .map(|f| (f.root, f.multiplicity))
        .collect();
    check(
        "factors of x^4-1",
        roots,
        vec![(1, 1), (2, 1), (3, 1), (4, 1)],
    )?;

    let gens4 = CyclicGenerators::new(
        &ring,
        4,
        vec![
            ZpPoly::new(p5(), vec![3, 1]),
            ZpPoly::new(p5(), vec![2, 1]),
            ZpPoly::new(p5(), vec![2, 2, 1]),
            ZpPoly::new(p5(), vec![1, 1]),
        ],
    )
    .map_err(|e| e.to_string())?;
    let g4 = gens4.compose();
    let want4: [[u64; 4]; 4] = [[3, 2, 4, 3], [1, 1, 2, 2], [0, 1, 2, 2], [0, 0, 0, 0]];
    for (j, want) in want4.iter().enumerate() {
        check(
            &format!("length-4 coefficient of x^{j}"),
            g4.coeff(j).coeffs(),
            want,
        )?;
    }

    // length five: x^5-1 = (x-1)^5, generators (x-1)^(1,3,2,4)
    let f5 = factor_xn_minus_1(p5(), 5).map_err(|e| e.to_string())?;
    let roots5: Vec<(u64, u32)> = f5
        .factors()
        .iter()
        .map(|f| (f.root, f.multiplicity))
        .collect();
    check("factors of x^5-1", roots5, vec![(1, 5)])?;

    let x_minus_1 = ZpPoly::new(p5(), vec![4, 1]);
    let gens5 = CyclicGenerators::new(
        &ring,
        5,
        vec![
            x_minus_1.clone(),
            x_minus_1.pow(3),
            x_minus_1.pow(2),
            x_minus_1.pow(4),
        ],
    )
    .map_err(|e| e.to_string())?;
    let g5 = gens5.compose();
    let want5: [[u64; 4]; 5] = [
        [4, 1, 3, 1],
        [1, 3, 4, 0],
        [0, 4, 4, 4],
        [0, 0, 2, 4],
        [0, 2, 2, 1],
    ];
    for (j, want) in want5.iter().enumerate() {
        check(
            &format!("length-5 coefficient of x^{j}"),
            g5.coeff(j).coeffs(),
            want,
        )?;
    }

    // both cyclic codes really are cyclic as linear codes
    for gens in [&gens4, &gens5] {
        if !gens.to_linear_code().is_cyclic() {
            return Err("composed cyclic code fails the shift-closure check".to_string());
        }
    }
    Ok(())
}
