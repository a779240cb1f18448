use quiverkac_core::quiver::builtin;
use quiverkac_core::series::DimBox;
use quiverkac_core::{DimVector, Quiver};

fn test_quivers() -> Vec<Quiver> {
    vec![
        builtin::a1(),
        builtin::a2(),
        builtin::a3(),
        builtin::d4(),
        builtin::kronecker(2),
        builtin::kronecker(3),
        builtin::triangle(),
        Quiver::numbered(3, &[(1, 2), (1, 2), (3, 2), (1, 3)]).unwrap(),
    ]
}

fn cube(q: &Quiver, side: u32) -> Vec<DimVector> {
    DimBox::new(DimVector::new(vec![side; q.vertex_count()])).iter().collect()
}

#[test]
fn cartan_matrix_ignores_orientation() {
    for q in test_quivers() {
        assert_eq!(q.cartan_matrix(), q.opposite().cartan_matrix());
        // Flip only the first arrow.
        if let Some((&(s, t), rest)) = q.arrows().split_first() {
            let mut arrows = vec![(t, s)];
            arrows.extend_from_slice(rest);
            let flipped = Quiver::from_indices(q.vertices().to_vec(), arrows).unwrap();
            assert_eq!(q.cartan_matrix(), flipped.cartan_matrix());
        }
        let c = q.cartan_matrix();
        for i in 0..c.size() {
            assert_eq!(c.entry(i, i), 2);
            for j in 0..c.size() {
                assert_eq!(c.entry(i, j), c.entry(j, i));
            }
        }
    }
}

#[test]
fn bilinear_form_polarizes_tits_form() {
    for q in test_quivers().into_iter().filter(|q| q.vertex_count() <= 3) {
        let vs = cube(&q, 3);
        for a in &vs {
            assert_eq!(q.bilinear_form(a, a).unwrap(), 2 * q.tits_form(a).unwrap());
            for b in &vs {
                let lhs = q.tits_form(&a.add(b)).unwrap() - q.tits_form(a).unwrap() - q.tits_form(b).unwrap();
                assert_eq!(lhs, q.bilinear_form(a, b).unwrap());
                let c = q.cartan_matrix();
                assert_eq!(c.pair(a.entries(), b.entries()), lhs);
            }
        }
    }
}

#[test]
fn both_expressions_for_d_agree() {
    for q in test_quivers().into_iter().filter(|q| q.vertex_count() <= 3) {
        let vs = cube(&q, 3);
        for a in &vs {
            for l in &vs {
                let d = q.dim_function(a, l).unwrap();
                let framed = 1 - q.frame(l).unwrap().tits_form(&a.framed(1)).unwrap();
                assert_eq!(d, framed);
            }
        }
    }
}

#[test]
fn frame_counts() {
    for q in test_quivers() {
        for l in cube(&q, 2) {
            let f = q.frame(&l).unwrap();
            assert_eq!(f.vertex_count(), q.vertex_count() + 1);
            assert_eq!(f.arrows().len() as u64, q.arrows().len() as u64 + l.height());
            assert_eq!(&f.arrows()[..q.arrows().len()], q.arrows());
        }
    }
}
