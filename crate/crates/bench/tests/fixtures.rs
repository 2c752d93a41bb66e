use stillman_bench::{random_generators, random_int_matrix};

#[test]
fn fixtures_are_deterministic() {
    assert_eq!(random_int_matrix(3, 4, 5, 7), random_int_matrix(3, 4, 5, 7));
    let m = random_int_matrix(3, 4, 5, 7);
    assert_eq!((m.rows(), m.cols()), (4, 5));
    let g = random_generators(1, 10, 3, 2);
    assert_eq!(g.len(), 10);
    assert!(g.iter().all(|v| v.dimension() == 3 && !v.is_zero()));
    assert_eq!(g, random_generators(1, 10, 3, 2));
}
