use std::collections::HashSet;

use spinrep::exactlin::CycMatrix;
use spinrep::groupcore::{self, Group};
use spinrep::spinrep::{irreps_by_spin_type, SpinType};

/// Unitriangular 3x3 over F3 as (a, b, c) ~ [[1,a,c],[0,1,b],[0,0,1]].
type Heis = (u8, u8, u8);

fn heis_mul(x: Heis, y: Heis) -> Heis {
    (
        (x.0 + y.0) % 3,
        (x.1 + y.1) % 3,
        (x.2 + y.2 + x.0 * y.1) % 3,
    )
}

fn heis_pow(x: Heis, e: u8) -> Heis {
    (0..e).fold((0, 0, 0), |acc, _| heis_mul(acc, x))
}

#[test]
fn g27_is_the_heisenberg_group() {
    let s = groupcore::g27().unwrap();
    let g = Group::new(s.clone()).unwrap();
    // x1 -> (1,0,0), x2 -> (0,0,1), x3 -> (0,1,0)
    let model = |e: &groupcore::Element| {
        let [a, b, c] = [e.exponent(0), e.exponent(1), e.exponent(2)];
        heis_mul(
            heis_mul(heis_pow((1, 0, 0), a), heis_pow((0, 0, 1), b)),
            heis_pow((0, 1, 0), c),
        )
    };
    let images: HashSet<Heis> = g.elements().iter().map(model).collect();
    assert_eq!(images.len(), 27);
    for x in g.elements() {
        for y in g.elements() {
            assert_eq!(
                model(&s.multiply(x, y).unwrap()),
                heis_mul(model(x), model(y))
            );
        }
    }
}

/// Π(1,0) ⊕ Π(0,1) is faithful: its kernel misses the center, and a
/// nontrivial normal subgroup of a p-group meets the center.
#[test]
fn r243_multiplication_matches_a_faithful_matrix_model() {
    let s = groupcore::r243().unwrap();
    let g = Group::new(s.clone()).unwrap();
    let a = &irreps_by_spin_type(SpinType::new(1, 0)).unwrap()[0];
    let b = &irreps_by_spin_type(SpinType::new(0, 1)).unwrap()[0];
    let model: Vec<(CycMatrix, CycMatrix)> = g
        .elements()
        .iter()
        .map(|e| {
            (
                a.evaluate(e).unwrap().as_cyc().unwrap(),
                b.evaluate(e).unwrap().as_cyc().unwrap(),
            )
        })
        .collect();
    assert_eq!(model.iter().collect::<HashSet<_>>().len(), 243);
    for i in 0..g.order() {
        for j in 0..g.order() {
            let k = g.mul_idx(i, j);
            assert_eq!(model[i].0.mul(&model[j].0).unwrap(), model[k].0);
            assert_eq!(model[i].1.mul(&model[j].1).unwrap(), model[k].1);
        }
    }
}

#[test]
fn naive_orders_and_centers() {
    for (name, params, order, center) in [
        ("G27", None, 27, Some(3)),
        ("G81", None, 81, None),
        ("GBAR", None, 81, None),
        ("GSHARP", None, 243, None),
        ("R243", None, 243, Some(9)),
        ("G81_param", Some((1, 2)), 81, None),
    ] {
        let s = groupcore::schema(name, params).unwrap();
        let g = Group::new(s.clone()).unwrap();
        assert_eq!(g.order(), order, "{name}");
        let naive = g
            .elements()
            .iter()
            .filter(|x| {
                g.elements()
                    .iter()
                    .all(|y| s.multiply(x, y).unwrap() == s.multiply(y, x).unwrap())
            })
            .count();
        assert_eq!(g.center().order(), naive, "{name}");
        if let Some(c) = center {
            assert_eq!(naive, c, "{name}");
        }
    }
}

#[test]
fn r243_has_exponent_nine() {
    let s = groupcore::r243().unwrap();
    let g = Group::new(s.clone()).unwrap();
    let naive_order = |x: &groupcore::Element| {
        let mut y = *x;
        let mut n = 1;
        while !y.is_identity() {
            y = s.multiply(&y, x).unwrap();
            n += 1;
        }
        n
    };
    let mut counts = [0usize; 10];
    for x in g.elements() {
        let n = naive_order(x);
        assert_eq!(n, s.element_order(x).unwrap() as usize);
        counts[n] += 1;
    }
    assert_eq!(counts[1] + counts[3] + counts[9], 243);
    assert!(counts[9] > 0);
}
