//! Matrix checks against direct computations on basis elements.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use yblie_core::context::{GradedObject, MonoidalContext};
use yblie_core::matrix::flip_matrix;
use yblie_core::rational::{rat, ratio, Rational};
use yblie_core::yangbaxter::scaled_flip;
use yblie_core::{corpus, RatMatrix, YBLieAlgebra, YBOperator};

type Table = Vec<Vec<Vec<Rational>>>;

fn table_of(alg: &YBLieAlgebra) -> Table {
    let d = alg.dim();
    (0..d)
        .map(|i| (0..d).map(|j| alg.bracket_of(i, j)).collect())
        .collect()
}

/// `[x,y] = -[y,x]` and `Σ_cyc [x,[y,z]] = 0` over all basis triples.
fn classical_lie(c: &Table) -> bool {
    let d = c.len();
    for i in 0..d {
        for j in 0..d {
            for l in 0..d {
                if c[i][j][l] != -c[j][i][l].clone() {
                    return false;
                }
            }
        }
    }
    let nested = |x: usize, y: usize, z: usize, l: usize| -> Rational {
        (0..d).map(|m| &c[y][z][m] * &c[x][m][l]).sum()
    };
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for l in 0..d {
                    let s = nested(i, j, k, l) + nested(j, k, i, l) + nested(k, i, j, l);
                    if !s.is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn random_table(rng: &mut ChaCha8Rng, d: usize) -> BTreeMap<(usize, usize), Vec<Rational>> {
    let mut c = BTreeMap::new();
    for i in 0..d {
        for j in i + 1..d {
            if rng.gen_bool(0.4) {
                let v: Vec<Rational> = (0..d)
                    .map(|_| if rng.gen_bool(0.3) { rat(rng.gen_range(-2..=2)) } else { rat(0) })
                    .collect();
                c.insert((j, i), v.iter().map(|x| -x).collect());
                c.insert((i, j), v);
            }
        }
    }
    c
}

#[test]
fn battery_agrees_with_classical_jacobi() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut pass, mut fail) = (0, 0);
    for n in 0..80 {
        let d = 1 + n % 4;
        let alg = YBLieAlgebra::from_structure_constants(d, &random_table(&mut rng, d)).unwrap();
        let oracle = classical_lie(&table_of(&alg));
        assert_eq!(alg.full_battery().passed(), oracle, "{:?}", alg.bracket());
        if oracle {
            pass += 1;
        } else {
            fail += 1;
        }
    }
    assert!(pass > 10 && fail > 10, "{pass} / {fail}");
}

/// Index-level braid identity for a strict context:
/// `λ₁₂ λ₂₃ λ₁₂ = λ₂₃ λ₁₂ λ₂₃` applied to every basis triple.
fn braid_holds(lambda: &RatMatrix, d: usize) -> bool {
    let apply12 = |v: &BTreeMap<[usize; 3], Rational>| {
        let mut out = BTreeMap::new();
        for (&[a, b, c], x) in v {
            for p in 0..d {
                for q in 0..d {
                    let e = lambda.get(p * d + q, a * d + b);
                    if !e.is_zero() {
                        *out.entry([p, q, c]).or_insert_with(Rational::zero) += e * x;
                    }
                }
            }
        }
        out
    };
    let apply23 = |v: &BTreeMap<[usize; 3], Rational>| {
        let mut out = BTreeMap::new();
        for (&[a, b, c], x) in v {
            for p in 0..d {
                for q in 0..d {
                    let e = lambda.get(p * d + q, b * d + c);
                    if !e.is_zero() {
                        *out.entry([a, p, q]).or_insert_with(Rational::zero) += e * x;
                    }
                }
            }
        }
        out
    };
    let clean = |v: BTreeMap<[usize; 3], Rational>| -> BTreeMap<[usize; 3], Rational> {
        v.into_iter().filter(|(_, x)| !x.is_zero()).collect()
    };
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                let v = BTreeMap::from([([a, b, c], rat(1))]);
                let l = clean(apply12(&apply23(&apply12(&v))));
                let r = clean(apply23(&apply12(&apply23(&v))));
                if l != r {
                    return false;
                }
            }
        }
    }
    true
}

fn random_invertible(rng: &mut ChaCha8Rng, d: usize) -> RatMatrix {
    loop {
        let v = (0..d * d)
            .map(|_| ratio(rng.gen_range(-3..=3), rng.gen_range(1..=3)))
            .collect();
        let m = RatMatrix::new(d, d, v).unwrap();
        if m.inverse().is_ok() {
            return m;
        }
    }
}

#[test]
fn yb_check_agrees_with_index_braid() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (mut pass, mut fail) = (0, 0);
    for n in 0..40 {
        let d = 1 + n % 3;
        let lambda = match n % 4 {
            0 => {
                let s: Vec<Vec<Rational>> = (0..d)
                    .map(|_| (0..d).map(|_| rat(1)).collect())
                    .collect();
                let mut s = s;
                for i in 0..d {
                    for j in i + 1..d {
                        let x = ratio(rng.gen_range(1..=4), rng.gen_range(1..=4));
                        s[j][i] = x.recip();
                        s[i][j] = x;
                    }
                    if rng.gen_bool(0.5) {
                        s[i][i] = rat(-1);
                    }
                }
                scaled_flip(&s).unwrap()
            }
            1 => {
                let q = random_invertible(&mut rng, d);
                let qi = q.inverse().unwrap();
                RatMatrix::chain(&[&q.kron(&q), &flip_matrix(d, d), &qi.kron(&qi)]).unwrap()
            }
            2 => {
                let mut perm: Vec<usize> = (0..d * d).collect();
                for i in (1..perm.len()).rev() {
                    perm.swap(i, rng.gen_range(0..=i));
                }
                RatMatrix::permutation(&perm)
            }
            _ => {
                let v = (0..d.pow(4)).map(|_| rat(rng.gen_range(-1..=1))).collect();
                RatMatrix::new(d * d, d * d, v).unwrap()
            }
        };
        let op = YBOperator::new(GradedObject::plain(d), lambda.clone(), MonoidalContext::Strict).unwrap();
        let oracle = braid_holds(&lambda, d);
        assert_eq!(op.check_yb().passed(), oracle, "{lambda:?}");
        if oracle {
            pass += 1;
        } else {
            fail += 1;
        }
    }
    assert!(pass > 5 && fail > 5, "{pass} / {fail}");
}

#[test]
fn flip_t_and_w_rotate_factors() {
    for d in 1..=4 {
        let op = YBOperator::new(GradedObject::plain(d), flip_matrix(d, d), MonoidalContext::Strict).unwrap();
        let idx = |a: usize, b: usize, c: usize| (a * d + b) * d + c;
        let mut t = RatMatrix::zeros(d * d * d, d * d * d);
        let mut w = t.clone();
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    t.set(idx(z, x, y), idx(x, y, z), rat(1));
                    w.set(idx(y, z, x), idx(x, y, z), rat(1));
                }
            }
        }
        assert_eq!(op.t_of(), &t);
        assert_eq!(op.w_of(), &w);
    }
}

#[test]
fn gl2_is_the_matrix_commutator() {
    let gl2 = corpus::mat2().commutator().unwrap();
    let delta = |a: usize, b: usize| if a == b { 1 } else { 0 };
    for (a, b, c, e) in quadruples(2) {
        let mut want = vec![rat(0); 4];
        want[2 * a + e] += rat(delta(b, c));
        want[2 * c + b] -= rat(delta(e, a));
        assert_eq!(gl2.bracket_of(2 * a + b, 2 * c + e), want);
    }
    assert!(classical_lie(&table_of(&gl2)));
}

#[test]
fn gl11_is_the_super_commutator() {
    let gl11 = corpus::gl11();
    let parity = |a: usize, b: usize| (a + b) % 2;
    let delta = |a: usize, b: usize| if a == b { 1 } else { 0 };
    for (a, b, c, e) in quadruples(2) {
        let (x, y) = (2 * a + b, 2 * c + e);
        let sign = if parity(a, b) * parity(c, e) == 1 { -1 } else { 1 };
        let mut want = vec![rat(0); 4];
        want[2 * a + e] += rat(delta(b, c));
        want[2 * c + b] -= rat(sign * delta(e, a));
        assert_eq!(gl11.bracket_of(x, y), want, "[{x}, {y}]");
    }
}

fn quadruples(n: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut v = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for e in 0..n {
                    v.push((a, b, c, e));
                }
            }
        }
    }
    v
}

#[test]
fn left_jacobi_follows_on_valid_algebras() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let gl11 = corpus::gl11();
    let plain_gl11 = YBLieAlgebra::new(
        gl11.op().rehome(GradedObject::plain(4), MonoidalContext::Strict).unwrap(),
        gl11.bracket().clone(),
    )
    .unwrap();
    let mut checked = 0;
    for n in 0..12 {
        let base = match n % 3 {
            0 => corpus::sl2(),
            1 => corpus::heisenberg(),
            _ => plain_gl11.clone(),
        };
        let alg = base.conjugate(&random_invertible(&mut rng, base.dim())).unwrap();
        let r = alg.full_battery();
        if ["self_inverse", "yang_baxter", "antisymmetry", "jacobi_right", "compatibility"]
            .iter()
            .all(|a| r.status(a) == Some(yblie_core::Status::Pass))
        {
            assert!(alg.check_jacobi_left().passed());
            checked += 1;
        }
    }
    assert_eq!(checked, 12);
}
