//! Axiom texts. Primed points are spelled with a `p` suffix (`Ap` for A′).

pub(crate) const INCIDENCE: &[(&str, &str)] = &[
    (
        "I-1",
        "(forall ((A Point) (B Point)) (=> (not (= A B))
           (and (exists ((l Line)) (and (in A l) (in B l)))
                (forall ((l Line) (m Line)) (=> (and (in A l) (in B l) (in A m) (in B m)) (= l m))))))",
    ),
    ("I-2", "(forall ((l Line)) (exists ((A Point) (B Point)) (and (not (= A B)) (in A l) (in B l))))"),
    (
        "I-3",
        "(exists ((A Point) (B Point) (C Point))
           (and (not (= A B)) (not (= A C)) (not (= B C))
                (forall ((l Line)) (not (and (in A l) (in B l) (in C l))))))",
    ),
    ("ParAx", "(forall ((l Line) (A Point) (m Line) (n Line)) (=> (and (in A m) (Par l m) (in A n) (Par l n)) (= m n)))"),
    (
        "Pappus",
        "(forall ((l Line) (lp Line) (A Point) (Cp Point) (m1 Line) (Ap Point) (C Point) (m2 Line)
                  (B Point) (Bp Point) (m3 Line) (m4 Line) (m5 Line) (m6 Line))
           (=> (and (in A l) (not (in A lp)) (in Cp lp) (not (in Cp l)) (in A m1) (in Cp m1)
                    (in Ap lp) (not (in Ap l)) (not (= Ap Cp)) (in C l) (not (in C lp)) (not (= A C))
                    (in Ap m2) (in C m2) (Par m1 m2)
                    (in B l) (not (in B lp)) (not (= A B)) (not (= B C))
                    (in Bp lp) (not (in Bp l)) (not (= Ap Bp)) (not (= Bp Cp))
                    (in B m3) (in Cp m3) (in Bp m4) (in C m4) (Par m3 m4)
                    (in A m5) (in Bp m5) (in Ap m6) (in B m6))
               (Par m5 m6)))",
    ),
    (
        "De-1",
        "(forall ((A Point) (B Point) (p Line) (Ap Point) (a Line) (q Line) (b Line) (Bp Point)
                  (C Point) (r Line) (s Line) (c Line) (Cp Point) (t Line) (u Line))
           (=> (and (not (= A B)) (in A p) (in B p) (not (in Ap p)) (in A a) (in Ap a)
                    (in Ap q) (Par p q) (in B b) (in Bp b) (in Bp q) (not (= B Bp)) (not (= Ap Bp))
                    (not (in C p)) (in A r) (in C r) (in Ap s) (Par r s)
                    (in C c) (in Cp c) (in Cp s) (not (= C Cp)) (not (= Ap Cp))
                    (in B t) (in C t) (in Bp u) (in Cp u)
                    (or (exists ((O Point)) (and (in O a) (in O b) (in O c)))
                        (and (Par a b) (Par a c) (Par b c))))
               (or (= t u) (Par t u))))",
    ),
    (
        "De-2",
        "(forall ((A Point) (B Point) (p Line) (Ap Point) (q Line) (Bp Point) (C Point) (r Line)
                  (s Line) (Cp Point) (t Line) (u Line) (a Line) (b Line) (c Line))
           (=> (and (not (= A B)) (in A p) (in B p) (not (in Ap p)) (in Ap q) (Par p q)
                    (in Bp q) (not (= Ap Bp)) (not (in C p)) (in A r) (in C r) (in Ap s) (Par r s)
                    (in Cp s) (not (= Ap Cp)) (in B t) (in C t) (in Bp u) (in Cp u) (Par t u)
                    (in A a) (in Ap a) (in B b) (in Bp b) (in C c) (in Cp c))
               (or (exists ((O Point)) (and (in O a) (in O b) (in O c)))
                   (and (Par a b) (Par a c) (Par b c)))))",
    ),
];

pub(crate) const HILBERT: &[(&str, &str)] = &[
    ("B-1", "(forall ((A Point) (B Point) (C Point)) (=> (Be A B C) (exists ((l Line)) (and (in A l) (in B l) (in C l)))))"),
    ("B-2", "(forall ((A Point) (B Point)) (=> (not (= A B)) (exists ((C Point)) (Be A B C))))"),
    (
        "B-3",
        "(forall ((l Line) (A Point) (B Point) (C Point))
           (=> (and (in A l) (in B l) (in C l) (not (= A B)) (not (= A C)) (not (= B C)))
               (and (or (Be B A C) (Be A B C) (Be A C B))
                    (not (and (Be B A C) (Be A B C)))
                    (not (and (Be B A C) (Be A C B)))
                    (not (and (Be A B C) (Be A C B))))))",
    ),
    (
        "B-4",
        "(forall ((A Point) (B Point) (k Line) (C Point) (l Line) (D Point))
           (=> (and (not (= A B)) (in A k) (in B k) (not (in C k))
                    (not (in A l)) (not (in B l)) (not (in C l)) (in D l) (in D k) (Be A D B))
               (exists ((E Point)) (and (in E l) (or (Be A E C) (Be B E C))))))",
    ),
    ("C-0", "(forall ((A Point) (B Point)) (and (Eq A B A B) (Eq A B B A)))"),
    (
        "C-1",
        "(forall ((A Point) (B Point) (l Line) (C Point) (Cp Point))
           (=> (and (not (= A B)) (in C l) (in Cp l) (not (= C Cp)))
               (exists ((D Point))
                 (and (in D l) (Eq A B C D) (or (= D Cp) (Be C Cp D) (Be C D Cp))
                      (forall ((E Point))
                        (=> (and (in E l) (Eq A B C E) (or (= E Cp) (Be C Cp E) (Be C E Cp))) (= E D)))))))",
    ),
    (
        "C-2",
        "(forall ((A Point) (B Point) (C Point) (D Point) (E Point) (F Point))
           (=> (and (Eq A B C D) (Eq A B E F)) (Eq C D E F)))",
    ),
    (
        "C-3",
        "(forall ((A Point) (B Point) (C Point) (D Point) (E Point) (F Point))
           (=> (and (Be A B C) (Be D E F) (Eq A B D E) (Eq B C E F)) (Eq A C D F)))",
    ),
    (
        "C-4",
        "(forall ((A Point) (B Point) (C Point) (D Point) (E Point) (k Line) (G Point))
           (=> (and (not (= A B)) (not (= A C)) (forall ((m Line)) (not (and (in A m) (in B m) (in C m))))
                    (not (= D E)) (in D k) (in E k) (not (in G k)))
               (exists ((F Point))
                 (and (An B A C E D F) (not (in F k))
                      (not (exists ((X Point)) (and (in X k) (Be F X G))))
                      (forall ((H Point))
                        (=> (and (An B A C E D H) (not (in H k))
                                 (not (exists ((Y Point)) (and (in Y k) (Be H Y G)))))
                            (or (= H F) (Be D H F) (Be D F H))))))))",
    ),
    (
        "C-5",
        "(forall ((A Point) (B Point) (C Point) (D Point) (E Point) (F Point) (G Point) (H Point) (I Point))
           (and (=> (and (not (= A B)) (not (= C B))) (An A B C A B C))
                (=> (An A B C D E F) (An D E F A B C))
                (=> (and (An A B C D E F) (An D E F G H I)) (An A B C G H I))))",
    ),
    (
        "C-6",
        "(forall ((A Point) (B Point) (C Point) (Ap Point) (Bp Point) (Cp Point))
           (=> (and (not (= B C)) (Eq A B Ap Bp) (Eq A C Ap Cp) (An B A C Bp Ap Cp))
               (and (Eq B C Bp Cp) (An A B C Ap Bp Cp) (An A C B Ap Cp Bp))))",
    ),
    (
        "AxE",
        "(forall ((A Point) (B Point) (C Point) (D Point) (E Point) (F Point))
           (=> (and (exists ((X Point) (U Point)) (and (Eq A X B C) (Eq D U E F) (Be D X U)))
                    (exists ((Y Point) (V Point)) (and (Eq A Y B C) (Eq D V E F) (Be D V Y))))
               (exists ((Z Point)) (and (Eq A Z B C) (Eq D Z E F)))))",
    ),
];

pub(crate) const WU: &[(&str, &str)] = &[
    ("O-1", "(forall ((l Line) (m Line)) (=> (Or l m) (Or m l)))"),
    (
        "O-2",
        "(forall ((O Point) (l Line)) (exists ((m Line))
           (and (Or l m) (in O m) (forall ((n Line)) (=> (and (Or l n) (in O n)) (= n m))))))",
    ),
    ("O-3", "(forall ((l Line) (m Line) (n Line)) (=> (and (Or l m) (Or l n) (not (= m n))) (Par m n)))"),
    ("O-4", "(forall ((O Point)) (exists ((l Line)) (and (in O l) (not (Or l l)))))"),
    (
        "O-5",
        "(forall ((A Point) (B Point) (C Point) (a Line) (b Line) (c Line) (ha Line) (hb Line) (hc Line) (H Point))
           (=> (and (in B a) (in C a) (not (in A a)) (in A b) (in C b) (in A c) (in B c)
                    (in A ha) (Or a ha) (in B hb) (Or b hb) (in C hc) (Or c hc) (in H ha) (in H hb))
               (in H hc)))",
    ),
    (
        "AxSymAx",
        "(forall ((l1 Line) (l2 Line) (O Point))
           (=> (and (in O l1) (in O l2) (not (= l1 l2)) (not (Or l1 l1)) (not (Or l2 l2)))
               (exists ((k Line))
                 (and (in O k)
                      (forall ((P Point))
                        (=> (in P l1)
                            (exists ((Q Point))
                              (and (in Q l2) (Eq O P O Q)
                                   (or (= P Q) (exists ((m Line)) (and (in P m) (in Q m) (Or m k))))))))))))",
    ),
    (
        "AxTrans",
        "(forall ((l Line) (lp Line) (A Point) (O Point) (B Point) (Op Point))
           (=> (and (not (Or l l)) (not (Or lp lp)) (in A l) (in O l) (in B l) (not (= A B)) (Eq A O O B) (in Op lp))
               (exists ((Ap Point) (Bp Point))
                 (and (in Ap lp) (in Bp lp) (not (= Ap Bp)) (Eq A B Ap Bp) (Eq Ap Op Op Bp)
                      (forall ((X Point) (Y Point))
                        (=> (and (in X lp) (in Y lp) (Eq A B X Y) (Eq X Op Op Y))
                            (or (and (= X Ap) (= Y Bp)) (and (= X Bp) (= Y Ap)))))))))",
    ),
];

pub(crate) const ORIGAMI: &[(&str, &str)] = &[
    (
        "H-1",
        "(forall ((P1 Point) (P2 Point)) (=> (not (= P1 P2)) (exists ((l Line))
           (and (in P1 l) (in P2 l) (forall ((m Line)) (=> (and (in P1 m) (in P2 m)) (= m l)))))))",
    ),
    (
        "H-2",
        "(forall ((P1 Point) (P2 Point)) (=> (not (= P1 P2)) (exists ((l Line))
           (and (SymLine P1 l P2) (forall ((m Line)) (=> (SymLine P1 m P2) (= m l)))))))",
    ),
    ("H-3", "(forall ((l1 Line) (l2 Line)) (exists ((k Line)) (forall ((P Point)) (=> (in P k) (Peq l1 P l2)))))"),
    (
        "H-4",
        "(forall ((P Point) (l Line)) (exists ((k Line))
           (and (in P k) (Or l k) (forall ((m Line)) (=> (and (in P m) (Or l m)) (= m k))))))",
    ),
    (
        "H-5",
        "(forall ((P1 Point) (P2 Point) (l1 Line)) (exists ((l2 Line))
           (and (in P2 l2) (exists ((Q Point)) (and (SymLine P1 l2 Q) (in Q l1))))))",
    ),
    (
        "H-6",
        "(forall ((P1 Point) (P2 Point) (l1 Line) (l2 Line)) (exists ((l3 Line))
           (and (exists ((Q1 Point)) (and (SymLine P1 l3 Q1) (in Q1 l1)))
                (exists ((Q2 Point)) (and (SymLine P2 l3 Q2) (in Q2 l2))))))",
    ),
    (
        "H-7",
        "(forall ((P Point) (l1 Line) (l2 Line)) (exists ((l3 Line))
           (and (Or l2 l3) (exists ((Q Point)) (and (SymLine P l3 Q) (in Q l1))))))",
    ),
];

/// H-4 and H-5 exactly as they are usually printed, with the shadowed `P`
/// (H-4) and the rebound `P2` (H-5). Kept for comparison only.
pub(crate) const PRINTED: &[(&str, &str)] = &[
    (
        "H-4",
        "(forall ((P Point) (l Line)) (exists ((k Line))
           (and (forall ((P Point)) (and (in P k) (Or l k)))
                (forall ((m Line)) (=> (forall ((P Point)) (and (in P m) (Or l m))) (= m k))))))",
    ),
    (
        "H-5",
        "(forall ((P1 Point) (P2 Point) (l1 Line)) (exists ((l2 Line))
           (forall ((P Point)) (and (in P2 l2) (exists ((P2 Point)) (and (SymLine P1 l2 P2) (in P2 l1)))))))",
    ),
];
