// Closed forms of the harmonic generating functions as s-expressions,
// with the rational sample points where each identity is tested.

pub const GENFUN_FORMULAS: &[(&str, &str, &[(i64, i64)])] = &[
    ("gf(1;1)", "(+ (li 2 x) (* (/ 1 2) (pow (log (+ 1 (neg x))) 2)))", &[(-3,4),(-1,2),(-1,3),(1,3),(1,2),(9,10)]),
    ("gf(1,1;0)", "(+ (/ (li 2 x) (+ 1 (neg x))) (/ (pow (log (+ 1 (neg x))) 2) (+ 1 (neg x))))", &[(-3,4),(-1,2),(-1,3),(1,3),(1,2),(9,10)]),
    ("gf(-1,-1;0)", "(/ (+ (* 2 (+ (li 2 (/ (+ 1 (neg x)) 2)) (neg (li 2 (/ 1 2))) (* (log (/ (+ x 1) 2)) (log (+ 1 (neg x)))))) (li 2 x)) (+ 1 (neg x)))", &[(-3,4),(-1,2),(-1,3),(1,3),(1,2),(9,10)]),
    ("gf(1,-1;0)", "(/ (+ (li 2 (/ (+ 1 (neg x)) 2)) (neg (li 2 (neg x))) (neg (li 2 (/ 1 2))) (neg (* (/ 1 2) (pow (log (+ x 1)) 2))) (neg (* (log 2) (log (+ 1 (neg x)))))) (+ 1 (neg x)))", &[(-3,4),(-1,2),(-1,3),(1,3),(1,2),(9,10)]),
    ("gf(1,2;0)", "(/ (+ (li 3 (+ 1 (neg x))) (li 3 x) (* (/ 1 2) (log x) (pow (log (+ 1 (neg x))) 2)) (neg (* (/ 1 6) (pow pi 2) (log (+ 1 (neg x))))) (neg (zeta 3))) (+ 1 (neg x)))", &[(-3,4),(-1,2),(-1,3),(1,3),(1,2),(9,10)]),
    ("gf(1,1,1;0)", "(/ (+ (* 3 (li 3 (+ 1 (neg x)))) (li 3 x) (neg (pow (log (+ 1 (neg x))) 3)) (* (/ 3 2) (log x) (pow (log (+ 1 (neg x))) 2)) (neg (* (/ 1 2) (pow pi 2) (log (+ 1 (neg x))))) (neg (* 3 (zeta 3)))) (+ 1 (neg x)))", &[(-3,4),(-1,2),(-1,3),(1,3),(1,2),(9,10)]),
    ("gf(1,1;1)", "(+ (li 3 x) (neg (* (li 2 x) (log (+ 1 (neg x))))) (neg (* (/ 1 3) (pow (log (+ 1 (neg x))) 3))))", &[(-3,4),(-1,2),(-1,3),(1,3),(1,2),(9,10)]),
    ("gf(2;1)", "(+ (* 2 (li 3 (+ 1 (neg x)))) (li 3 x) (neg (* 2 (li 2 (+ 1 (neg x))) (log (+ 1 (neg x))))) (neg (* (li 2 x) (log (+ 1 (neg x))))) (neg (* (log x) (pow (log (+ 1 (neg x))) 2))) (neg (* 2 (zeta 3))))", &[(-3,4),(-1,2),(-1,3),(1,3),(1,2),(9,10)]),
    ("gf(1;2)", "(+ (neg (li 3 (+ 1 (neg x)))) (li 3 x) (* (li 2 (+ 1 (neg x))) (log (+ 1 (neg x)))) (* (/ 1 2) (log x) (pow (log (+ 1 (neg x))) 2)) (zeta 3))", &[(-3,4),(-1,2),(-1,3),(1,3),(1,2),(9,10)]),
    ("gf(-1;1)", "(+ (li 2 (/ (+ 1 (neg x)) 2)) (neg (li 2 (neg x))) (neg (li 2 (/ 1 2))) (neg (* (log 2) (log (+ 1 (neg x))))))", &[(-3,4),(-1,2),(-1,3),(1,3),(1,2),(9,10)]),
    ("gf(1,1;2)", "(+ (/ (pow (li 2 x) 2) 2) (neg (* 2 (li 4 (+ 1 (neg x))))) (li 4 x) (neg (* (li 2 (+ 1 (neg x))) (pow (log (+ 1 (neg x))) 2))) (* 2 (li 3 (+ 1 (neg x))) (log (+ 1 (neg x)))) (neg (* (/ 1 3) (log x) (pow (log (+ 1 (neg x))) 3))) (/ (pow pi 4) 45))", &[(-3,4),(-1,2),(-1,3),(1,3),(1,2),(9,10)]),
    ("gf(2;2)", "(+ (neg (* (/ 1 6) (pow (log (+ (/ 1 x) (neg 1))) 4))) (* (/ 2 3) (log (+ 1 (neg x))) (pow (log (+ (/ 1 x) (neg 1))) 3)) (* (/ 2 3) (log (/ 1 x)) (pow (log (+ (/ 1 x) (neg 1))) 3)) (neg (* (pow (log (+ 1 (neg x))) 2) (pow (log (+ (/ 1 x) (neg 1))) 2))) (* 2 (li 2 (/ (+ x (neg 1)) x)) (pow (log (+ (/ 1 x) (neg 1))) 2)) (neg (* 2 (li 2 x) (pow (log (+ (/ 1 x) (neg 1))) 2))) (* (/ 2 3) (pow (log (+ 1 (neg x))) 3) (log (+ (/ 1 x) (neg 1)))) (* 2 (pow (log (+ 1 (neg x))) 2) (log x) (log (+ (/ 1 x) (neg 1)))) (* 4 (log (+ 1 (neg x))) (li 2 (+ 1 (neg x))) (log (+ (/ 1 x) (neg 1)))) (* 4 (log (+ 1 (neg x))) (li 2 x) (log (+ (/ 1 x) (neg 1)))) (neg (* 4 (li 3 (+ 1 (neg x))) (log (+ (/ 1 x) (neg 1))))) (neg (* 4 (li 3 (/ (+ x (neg 1)) x)) (log (+ (/ 1 x) (neg 1))))) (neg (* 4 (li 3 x) (log (+ (/ 1 x) (neg 1))))) (/ (pow pi 4) 18) (neg (* (/ 1 12) (pow (log (/ x (+ 1 (neg x)))) 4))) (neg (* (/ 1 6) (pow (log (+ 1 (neg x))) 4))) (* (/ 1 3) (log (/ 1 (+ 1 (neg x)))) (pow (log (/ x (+ 1 (neg x)))) 3)) (* (/ 1 3) (log (/ x (+ 1 (neg x)))) (pow (log x) 3)) (neg (* (/ 2 3) (log (+ 1 (neg x))) (pow (log x) 3))) (neg (* (/ 1 2) (pow (log x) 2) (pow (log (/ x (+ 1 (neg x)))) 2))) (* (/ 3 2) (pow (log (+ 1 (neg x))) 2) (pow (log x) 2)) (* (log (/ x (+ 1 (neg x)))) (log (+ 1 (neg x))) (pow (log x) 2)) (/ (pow (li 2 x) 2) 2) (* (/ 1 3) (pow (log (/ x (+ 1 (neg x)))) 3) (log x)) (neg (* (/ 4 3) (pow (log (+ 1 (neg x))) 3) (log x))) (* (pow (log (/ x (+ 1 (neg x)))) 2) (li 2 (neg (/ x (+ 1 (neg x)))))) (neg (* (pow (log (/ x (+ 1 (neg x)))) 2) (li 2 (+ 1 (neg x))))) (neg (* 2 (pow (log (+ 1 (neg x))) 2) (li 2 (+ 1 (neg x))))) (neg (* (pow (log x) 2) (li 2 (+ 1 (neg x))))) (* 2 (log (/ x (+ 1 (neg x)))) (log x) (li 2 (+ 1 (neg x)))) (* 2 (log (+ 1 (neg x))) (log x) (li 2 (+ 1 (neg x)))) (neg (* 2 (pow (log (+ 1 (neg x))) 2) (li 2 x))) (neg (* (pow (log x) 2) (li 2 x))) (* 2 (log (/ x (+ 1 (neg x)))) (log x) (li 2 x)) (* 2 (log (+ 1 (neg x))) (log x) (li 2 x)) (neg (* 2 (log (/ x (+ 1 (neg x)))) (li 3 (neg (/ x (+ 1 (neg x))))))) (neg (* 2 (log (/ x (+ 1 (neg x)))) (li 3 (+ 1 (neg x))))) (neg (* 2 (log (/ x (+ 1 (neg x)))) (li 3 x))) (* 2 (log (+ 1 (neg x))) (li 3 x)) (* 2 (li 4 (neg (/ x (+ 1 (neg x)))))) (* 2 (li 4 (+ 1 (neg x)))) (* 4 (li 4 (/ (+ x (neg 1)) x))) (neg (li 4 x)) (neg (* 2 (log x) (zeta 3))) (neg (/ (pow (log x) 4) 12)))", &[(-3,4),(-1,2),(-1,3),(1,3),(1,2),(9,10)]),
    ("gf(1;3)", "(+ (* (/ 1 12) (pow (log (+ (/ 1 x) (neg 1))) 4)) (neg (* (/ 1 3) (log (+ 1 (neg x))) (pow (log (+ (/ 1 x) (neg 1))) 3))) (neg (* (/ 1 3) (log (/ 1 x)) (pow (log (+ (/ 1 x) (neg 1))) 3))) (* (/ 1 2) (pow (log (+ 1 (neg x))) 2) (pow (log (+ (/ 1 x) (neg 1))) 2)) (neg (* (li 2 (/ (+ x (neg 1)) x)) (pow (log (+ (/ 1 x) (neg 1))) 2))) (* (li 2 x) (pow (log (+ (/ 1 x) (neg 1))) 2)) (neg (* (/ 1 3) (pow (log (+ 1 (neg x))) 3) (log (+ (/ 1 x) (neg 1))))) (neg (* (pow (log (+ 1 (neg x))) 2) (log x) (log (+ (/ 1 x) (neg 1))))) (neg (* 2 (log (+ 1 (neg x))) (li 2 (+ 1 (neg x))) (log (+ (/ 1 x) (neg 1))))) (neg (* 2 (log (+ 1 (neg x))) (li 2 x) (log (+ (/ 1 x) (neg 1))))) (* 2 (li 3 (+ 1 (neg x))) (log (+ (/ 1 x) (neg 1)))) (* 2 (li 3 (/ (+ x (neg 1)) x)) (log (+ (/ 1 x) (neg 1)))) (* 2 (li 3 x) (log (+ (/ 1 x) (neg 1)))) (* (/ 1 24) (pow (log (/ x (+ 1 (neg x)))) 4)) (* (/ 1 12) (pow (log (+ 1 (neg x))) 4)) (/ (pow (log x) 4) 24) (neg (* (/ 1 6) (log (/ 1 (+ 1 (neg x)))) (pow (log (/ x (+ 1 (neg x)))) 3))) (neg (* (/ 1 6) (log x) (pow (log (/ x (+ 1 (neg x)))) 3))) (* (/ 1 3) (log (+ 1 (neg x))) (pow (log x) 3)) (* (/ 1 4) (pow (log (/ x (+ 1 (neg x)))) 2) (pow (log x) 2)) (neg (* (/ 3 4) (pow (log (+ 1 (neg x))) 2) (pow (log x) 2))) (neg (* (/ 1 6) (pow (log x) 3) (log (/ x (+ 1 (neg x)))))) (neg (* (/ 1 2) (log (+ 1 (neg x))) (pow (log x) 2) (log (/ x (+ 1 (neg x)))))) (* (/ 2 3) (pow (log (+ 1 (neg x))) 3) (log x)) (* (/ 1 2) (pow (log (/ x (+ 1 (neg x)))) 2) (li 2 (+ 1 (neg x)))) (* (pow (log (+ 1 (neg x))) 2) (li 2 (+ 1 (neg x)))) (* (/ 1 2) (pow (log x) 2) (li 2 (+ 1 (neg x)))) (neg (* (log x) (log (/ x (+ 1 (neg x)))) (li 2 (+ 1 (neg x))))) (neg (* (log (+ 1 (neg x))) (log x) (li 2 (+ 1 (neg x))))) (neg (* (/ 1 2) (pow (log (/ x (+ 1 (neg x)))) 2) (li 2 (/ x (+ x (neg 1)))))) (* (pow (log (+ 1 (neg x))) 2) (li 2 x)) (* (/ 1 2) (pow (log x) 2) (li 2 x)) (neg (* (log x) (log (/ x (+ 1 (neg x)))) (li 2 x))) (neg (* (log (+ 1 (neg x))) (log x) (li 2 x))) (* (log (/ x (+ 1 (neg x)))) (li 3 (+ 1 (neg x)))) (* (log (/ x (+ 1 (neg x)))) (li 3 (/ x (+ x (neg 1))))) (* (log (/ x (+ 1 (neg x)))) (li 3 x)) (neg (* (log (+ 1 (neg x))) (li 3 x))) (neg (li 4 (+ 1 (neg x)))) (neg (li 4 (/ x (+ x (neg 1))))) (neg (* 2 (li 4 (/ (+ x (neg 1)) x)))) (* 2 (li 4 x)) (* (log x) (zeta 3)) (neg (/ (pow pi 4) 36)))", &[(-3,4),(-1,2),(-1,3),(1,3),(1,2),(9,10)]),
    ("gf(1,2;1)", "(+ (/ (pow (li 2 (+ 1 (neg x))) 2) 2) (neg (/ (pow (li 2 x) 2) 2)) (/ (* (pow pi 2) (li 2 x)) 6) (li 4 (+ 1 (neg x))) (neg (li 4 (/ x (+ x (neg 1))))) (* (/ 1 2) (li 2 (+ 1 (neg x))) (pow (log (/ x (+ 1 (neg x)))) 2)) (neg (* (/ 1 2) (li 2 (/ x (+ x (neg 1)))) (pow (log (/ x (+ 1 (neg x)))) 2))) (* (/ 1 2) (li 2 (+ 1 (neg x))) (pow (log (+ 1 (neg x))) 2)) (* (/ 1 2) (li 2 (+ 1 (neg x))) (pow (log x) 2)) (* (/ 1 2) (li 2 x) (pow (log x) 2)) (neg (* (li 2 (+ 1 (neg x))) (log x) (log (/ x (+ 1 (neg x)))))) (neg (* (li 2 x) (log x) (log (/ x (+ 1 (neg x)))))) (* (li 3 (+ 1 (neg x))) (log (/ x (+ 1 (neg x))))) (* (li 3 (/ x (+ x (neg 1)))) (log (/ x (+ 1 (neg x))))) (* (li 3 x) (log (/ x (+ 1 (neg x))))) (neg (* (li 2 x) (log (+ 1 (neg x))) (log x))) (neg (* (li 3 (+ 1 (neg x))) (log (+ 1 (neg x))))) (* (zeta 3) (log (+ 1 (neg x)))) (neg (* (zeta 3) (log x))) (* (/ 1 24) (pow (log (/ x (+ 1 (neg x)))) 4)) (/ (pow (log x) 4) 24) (neg (* (/ 1 6) (log (/ 1 (+ 1 (neg x)))) (pow (log (/ x (+ 1 (neg x)))) 3))) (neg (* (/ 1 6) (log x) (pow (log (/ x (+ 1 (neg x)))) 3))) (neg (* (/ 1 6) (pow (log x) 3) (log (/ x (+ 1 (neg x)))))) (* (/ 1 3) (log (+ 1 (neg x))) (pow (log x) 3)) (* (/ 1 4) (pow (log x) 2) (pow (log (/ x (+ 1 (neg x)))) 2)) (neg (* (/ 1 2) (log (+ 1 (neg x))) (pow (log x) 2) (log (/ x (+ 1 (neg x)))))) (* (/ 1 12) (pow pi 2) (pow (log (+ 1 (neg x))) 2)) (neg (* (/ 1 4) (pow (log (+ 1 (neg x))) 2) (pow (log x) 2))) (neg (/ (pow pi 4) 40)))", &[(-3,4),(-1,2),(-1,3),(1,3),(1,2),(9,10)]),
    ("gf(3;1)", "(+ (neg (/ (pow (li 2 x) 2) 2)) (li 4 x) (neg (* (li 3 x) (log (+ 1 (neg x))))))", &[(-3,4),(-1,2),(-1,3),(1,3),(1,2),(9,10)]),
    ("gf(1,1,1;1)", "(+ (/ (* 3 (pow (li 2 (+ 1 (neg x))) 2)) 2) (neg (/ (pow (li 2 x) 2) 2)) (/ (* (pow pi 2) (li 2 x)) 2) (neg (* 3 (li 4 (+ 1 (neg x))))) (neg (* 3 (li 4 (/ x (+ x (neg 1)))))) (neg (* 2 (li 4 x))) (* (/ 3 2) (li 2 (+ 1 (neg x))) (pow (log (/ x (+ 1 (neg x)))) 2)) (neg (* (/ 3 2) (li 2 (/ x (+ x (neg 1)))) (pow (log (/ x (+ 1 (neg x)))) 2))) (neg (* (/ 3 2) (li 2 (+ 1 (neg x))) (pow (log (+ 1 (neg x))) 2))) (* (/ 3 2) (li 2 (+ 1 (neg x))) (pow (log x) 2)) (* (/ 3 2) (li 2 x) (pow (log x) 2)) (neg (* 3 (li 2 (+ 1 (neg x))) (log x) (log (/ x (+ 1 (neg x)))))) (neg (* 3 (li 2 x) (log x) (log (/ x (+ 1 (neg x)))))) (* 3 (li 3 (+ 1 (neg x))) (log (/ x (+ 1 (neg x))))) (* 3 (li 3 (/ x (+ x (neg 1)))) (log (/ x (+ 1 (neg x))))) (* 3 (li 3 x) (log (/ x (+ 1 (neg x))))) (neg (* 3 (li 2 x) (log (+ 1 (neg x))) (log x))) (* 3 (li 3 (+ 1 (neg x))) (log (+ 1 (neg x)))) (* 2 (li 3 x) (log (+ 1 (neg x)))) (* 3 (zeta 3) (log (+ 1 (neg x)))) (neg (* 3 (zeta 3) (log x))) (* (/ 1 8) (pow (log (/ x (+ 1 (neg x)))) 4)) (* (/ 1 4) (pow (log (+ 1 (neg x))) 4)) (/ (pow (log x) 4) 8) (neg (* (/ 1 2) (log (/ 1 (+ 1 (neg x)))) (pow (log (/ x (+ 1 (neg x)))) 3))) (neg (* (/ 1 2) (log x) (pow (log (/ x (+ 1 (neg x)))) 3))) (neg (* (/ 1 2) (pow (log x) 3) (log (/ x (+ 1 (neg x)))))) (* (log (+ 1 (neg x))) (pow (log x) 3)) (neg (* (pow (log (+ 1 (neg x))) 3) (log x))) (* (/ 3 4) (pow (log x) 2) (pow (log (/ x (+ 1 (neg x)))) 2)) (neg (* (/ 3 2) (log (+ 1 (neg x))) (pow (log x) 2) (log (/ x (+ 1 (neg x)))))) (* (/ 1 4) (pow pi 2) (pow (log (+ 1 (neg x))) 2)) (neg (* (/ 3 4) (pow (log (+ 1 (neg x))) 2) (pow (log x) 2))) (neg (/ (pow pi 4) 120)))", &[(-3,4),(-1,2),(-1,3),(1,3),(1,2),(9,10)]),
    ("gf(-1;2)", "(+ (neg (li 3 (/ (+ x 1) 2))) (neg (li 3 (neg x))) (neg (li 3 x)) (neg (li 3 (/ x (+ x 1)))) (li 3 (/ (* 2 x) (+ x 1))) (* (log 2) (li 2 x)) (* (li 2 (/ (+ x 1) 2)) (+ (log x) (neg (log (/ (* 2 x) (+ x 1)))))) (* (li 2 (+ (/ 1 2) (neg (/ x 2)))) (log x)) (* (li 2 x) (+ (log (/ x (+ x 1))) (log (+ x 1)))) (* (+ (li 2 (/ x (+ x 1))) (neg (li 2 (/ (* 2 x) (+ x 1))))) (log (/ (* 2 x) (+ x 1)))) (* (/ 1 2) (pow (log 2) 2) (log x)) (* (/ 1 2) (pow (log (/ (* 2 x) (+ x 1))) 2) (+ (log (/ (+ 1 (neg x)) 2)) (log (/ 1 (+ x 1))) (neg (log (neg (/ (+ x (neg 1)) (+ x 1))))))) (* (log 2) (log x) (log (/ (* 2 x) (+ x 1)))) (neg (* (/ 1 2) (log 2) (log x) (+ (log x) (neg (* 2 (log (+ x 1)))) (log 4)))) (neg (* (/ 1 12) (pow pi 2) (log x))) (* (log (/ (+ 1 (neg x)) 2)) (log (/ (+ x 1) 2)) (log x)) (/ (* 7 (zeta 3)) 8) (/ (pow (log 2) 3) 6))", &[(-3,4),(-1,2),(-1,3),(1,3),(1,2),(9,10)]),
    ("gf(1,-1;1)", "(+ (neg (li 3 (/ (+ 1 (neg x)) 2))) (neg (* 2 (li 3 (/ (+ x 1) 2)))) (li 3 (/ (+ x 1) (+ 1 (neg x)))) (neg (li 3 (+ 1 (neg x)))) (neg (li 3 (/ (+ x 1) (+ x (neg 1))))) (neg (li 3 (neg x))) (neg (li 3 x)) (neg (li 3 (/ x (+ x 1)))) (li 3 (/ (* 2 x) (+ x 1))) (* (/ 1 2) (log 2) (+ (* 2 (li 2 x)) (pow (log (+ 1 (neg x))) 2))) (* (li 2 (/ (+ 1 (neg x)) 2)) (log (+ 1 (neg x)))) (neg (* (li 2 (/ (+ 1 (neg x)) 2)) (+ (log (+ 1 (neg x))) (neg (log x))))) (* (li 2 (/ (+ x 1) 2)) (+ (log x) (neg (log (/ (* 2 x) (+ x 1)))))) (* (li 2 (/ (+ x 1) 2)) (log (+ x 1))) (* (li 2 (+ 1 (neg x))) (+ (log (+ x 1)) (neg (log (/ (+ x 1) (+ 1 (neg x))))))) (* (+ (li 2 (/ (+ x 1) (+ x (neg 1)))) (neg (li 2 (/ (+ x 1) (+ 1 (neg x)))))) (log (/ (+ x 1) (+ 1 (neg x))))) (* (li 2 (neg x)) (+ (log (+ 1 (neg x))) (neg (log x)))) (* (li 2 (neg x)) (log x)) (* (li 2 x) (+ (log (/ x (+ x 1))) (log (+ x 1)))) (* (+ (li 2 (/ x (+ x 1))) (neg (li 2 (/ (* 2 x) (+ x 1))))) (log (/ (* 2 x) (+ x 1)))) (* (li 2 (+ x 1)) (+ (log (/ (+ x 1) (+ 1 (neg x)))) (log (+ 1 (neg x))))) (neg (* (li 2 (+ x 1)) (log (+ x 1)))) (* (/ 1 2) (log (/ (+ 1 (neg x)) 2)) (pow (log (+ x 1)) 2)) (neg (* (/ 1 2) (log (neg x)) (pow (log (+ x 1)) 2))) (* (/ 1 12) (+ (pow pi 2) (neg (* 6 (pow (log 2) 2)))) (log (+ 1 (neg x)))) (* (/ 1 2) (pow (log (/ (+ x 1) (+ 1 (neg x)))) 2) (+ (neg (log (/ (* 2 x) (+ x (neg 1))))) (log (neg (/ 2 (+ x (neg 1))))) (log x))) (neg (* (/ 1 12) (+ (pow pi 2) (neg (* 6 (pow (log 2) 2)))) (log x))) (* (/ 1 2) (pow (log (/ (* 2 x) (+ x 1))) 2) (+ (log (/ (+ 1 (neg x)) 2)) (log (/ 1 (+ x 1))) (neg (log (neg (/ (+ x (neg 1)) (+ x 1))))))) (* (log 2) (log x) (log (/ (* 2 x) (+ x 1)))) (neg (* (/ 1 2) (log 2) (log x) (+ (log x) (neg (* 2 (log (+ x 1)))) (log 4)))) (* (log (/ (+ 1 (neg x)) 2)) (log (/ (+ x 1) 2)) (log x)) (* (log (/ (+ x 1) (+ 1 (neg x)))) (+ (log (neg x)) (neg (log x))) (log (+ x 1))) (* (log (+ 1 (neg x))) (log x) (log (+ x 1))) (* (/ 1 2) (+ (log x) (neg (log (neg x)))) (log (+ x 1)) (+ (log (+ x 1)) (neg (* 2 (log (+ 1 (neg x))))))) (/ (* 15 (zeta 3)) 8) (/ (pow (log 2) 3) 2) (neg (* (/ 1 6) (pow pi 2) (log 2))))", &[(-3,4),(-1,2),(-1,3),(1,3),(1,2),(9,10)]),
    ("gf(-1,-1;1)", "(+ (neg (* 4 (li 3 (/ (+ 1 (neg x)) 2)))) (neg (* 2 (li 3 (/ (+ x 1) 2)))) (* 2 (li 3 (/ (+ x 1) (+ 1 (neg x))))) (neg (* 2 (li 3 (/ (+ x 1) (+ x (neg 1)))))) (neg (li 3 x)) (neg (* 2 (li 3 (/ x (+ x 1))))) (* 2 (li 3 (/ (* 2 x) (+ x 1)))) (neg (* 2 (li 3 (+ x 1)))) (* (log 2) (+ (* 2 (li 2 x)) (pow (log (+ 1 (neg x))) 2))) (* 4 (li 2 (/ (+ 1 (neg x)) 2)) (log (+ 1 (neg x)))) (neg (* 2 (li 2 (/ (+ 1 (neg x)) 2)) (+ (log (+ 1 (neg x))) (neg (log x))))) (* 2 (li 2 (/ (+ x 1) 2)) (+ (log x) (neg (log (/ (* 2 x) (+ x 1)))))) (* 2 (li 2 (+ 1 (neg x))) (+ (log (+ x 1)) (neg (log (/ (+ x 1) (+ 1 (neg x))))))) (neg (* 2 (li 2 (+ 1 (neg x))) (log (+ 1 (neg x))))) (* 2 (+ (li 2 (/ (+ x 1) (+ x (neg 1)))) (neg (li 2 (/ (+ x 1) (+ 1 (neg x)))))) (log (/ (+ x 1) (+ 1 (neg x))))) (neg (* (li 2 x) (+ (log (+ 1 (neg x))) (neg (log x))))) (neg (* (li 2 x) (log x))) (* 2 (li 2 x) (+ (log (/ x (+ x 1))) (log (+ x 1)))) (* 2 (+ (li 2 (/ x (+ x 1))) (neg (li 2 (/ (* 2 x) (+ x 1))))) (log (/ (* 2 x) (+ x 1)))) (* 2 (li 2 (+ x 1)) (+ (log (/ (+ x 1) (+ 1 (neg x)))) (log (+ 1 (neg x))))) (neg (* (log 2) (pow (log (+ 1 (neg x))) 2))) (* (/ 1 6) (+ (pow pi 2) (neg (* 6 (pow (log 2) 2)))) (log (+ 1 (neg x)))) (* (pow (log (/ (+ x 1) (+ 1 (neg x)))) 2) (+ (neg (log (/ (* 2 x) (+ x (neg 1))))) (log (neg (/ 2 (+ x (neg 1))))) (log x))) (neg (* (pow (log (+ 1 (neg x))) 2) (log x))) (neg (* (/ 1 6) (+ (pow pi 2) (neg (* 6 (pow (log 2) 2)))) (log x))) (* (pow (log (/ (* 2 x) (+ x 1))) 2) (+ (log (/ (+ 1 (neg x)) 2)) (log (/ 1 (+ x 1))) (neg (log (neg (/ (+ x (neg 1)) (+ x 1))))))) (* 2 (log 2) (log x) (log (/ (* 2 x) (+ x 1)))) (neg (* (log 2) (log x) (+ (log x) (neg (* 2 (log (+ x 1)))) (log 4)))) (* 2 (log (/ (+ 1 (neg x)) 2)) (log (/ (+ x 1) 2)) (log x)) (* 2 (log (/ (+ x 1) (+ 1 (neg x)))) (+ (log (neg x)) (neg (log x))) (log (+ x 1))) (* 2 (log (+ 1 (neg x))) (log x) (log (+ x 1))) (* (+ (log x) (neg (log (neg x)))) (log (+ x 1)) (+ (log (+ x 1)) (neg (* 2 (log (+ 1 (neg x))))))) (/ (* 15 (zeta 3)) 4) (pow (log 2) 3) (neg (* (/ 1 3) (pow pi 2) (log 2))))", &[(-3,4),(-1,2),(-1,3),(1,3),(1,2),(9,10)]),
];
