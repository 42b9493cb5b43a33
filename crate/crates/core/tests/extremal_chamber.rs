use chainspace::chain::ChainType;
use chainspace::chambers::chamber_decomposition_with_lines;
use chainspace::geometry::functional::AffineFunctional;
use chainspace::geometry::polygon::ParamBox;
use chainspace::geometry::rational::{rat, Rational};
use chainspace::params::special::region_m1n;
use chainspace::Error;

fn distance_squared(f: &AffineFunctional, p: &[Rational]) -> Rational {
    let v = f.evaluate(p).unwrap();
    let norm: Rational = f.coefficients.iter().map(|c| c * c).sum();
    &v * &v / norm
}

#[test]
fn extremal_chamber_of_211_300() {
    let t = ChainType::of(&[2, 1, 1], &[3, 0, 0]);
    let region = region_m1n(&t).unwrap().report;
    let hs = region.plain();
    let extra: Vec<AffineFunctional> = hs.iter().map(|h| h.functional.clone()).collect();
    let bx = ParamBox::cube(2, 4, 6).unwrap();
    let d = chamber_decomposition_with_lines(&t, &bx, &extra).unwrap();
    let l_i = &hs[0].functional;

    let id = d.chamber_adjacent_to_line(Some(&hs), l_i, -1).unwrap();
    let c = &d.chambers[id];
    assert_eq!(c.dim, 2);
    assert_eq!(c.sample, vec![rat(13, 3), rat(13, 3)]);
    for h in &hs {
        assert!(h.contains_strictly(&c.sample).unwrap(), "{h}");
    }
    let (li, _) = d.line_index(l_i).unwrap();
    assert_eq!(c.bounding_lines, vec![li]);
    assert_eq!(c.closure, vec![vec![rat(4, 1), rat(4, 1)], vec![rat(5, 1), rat(4, 1)], vec![rat(4, 1), rat(5, 1)]]);
    let to_l_i = distance_squared(l_i, &c.sample);
    for (k, line) in d.lines.iter().enumerate().filter(|(k, _)| *k != li) {
        assert!(to_l_i < distance_squared(line, &c.sample), "line {k}: {line}");
    }

    assert!(matches!(d.chamber_adjacent_to_line(Some(&hs), l_i, 1), Err(Error::NotFound(_))));
}
