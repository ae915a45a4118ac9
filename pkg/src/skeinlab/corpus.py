"""Built-in triangulations and curves used by tests, the self-test command and
the example scripts.

All triangles are written as counterclockwise edge walks; every builder is
checked by validate_triangulation in the test suite.  Crossing lists were read
off from explicit planar pictures of each surface.
"""

from __future__ import annotations

from .surface import Triangulation, PUNCTURE, BOUNDARY_POINT, INTERIOR, BOUNDARY
from .curves import TaggedCurve, ARC, CLOSED, NOTCHED


def running_example():
    """Disc with two punctures p, q and seven boundary marked points A..G.

    Interior arcs: sigma1..sigma4 at p (CCW: sigma1=pD, sigma2=pA, sigma3=pB,
    sigma4=pC), eta1=qF, eta2=qG, eta3=qE at q, and tau1=CD, tau2=CE, tau3=FE
    between the punctures.
    """
    vertices = {
        "p": PUNCTURE,
        "q": PUNCTURE,
        "A": BOUNDARY_POINT,
        "B": BOUNDARY_POINT,
        "C": BOUNDARY_POINT,
        "D": BOUNDARY_POINT,
        "E": BOUNDARY_POINT,
        "F": BOUNDARY_POINT,
        "G": BOUNDARY_POINT,
    }
    edges = {
        "sigma1": (INTERIOR, ("p", "D")),
        "sigma2": (INTERIOR, ("p", "A")),
        "sigma3": (INTERIOR, ("p", "B")),
        "sigma4": (INTERIOR, ("p", "C")),
        "tau1": (INTERIOR, ("C", "D")),
        "tau2": (INTERIOR, ("C", "E")),
        "tau3": (INTERIOR, ("F", "E")),
        "eta1": (INTERIOR, ("F", "q")),
        "eta2": (INTERIOR, ("q", "G")),
        "eta3": (INTERIOR, ("E", "q")),
        "AB": (BOUNDARY, ("A", "B")),
        "BC": (BOUNDARY, ("B", "C")),
        "CF": (BOUNDARY, ("C", "F")),
        "FG": (BOUNDARY, ("F", "G")),
        "GE": (BOUNDARY, ("G", "E")),
        "ED": (BOUNDARY, ("E", "D")),
        "DA": (BOUNDARY, ("D", "A")),
    }
    triangles = [
        ("AB", "sigma3", "sigma2"),  # A->B->p
        ("sigma2", "sigma1", "DA"),  # A->p->D
        ("BC", "sigma4", "sigma3"),  # B->C->p
        ("sigma4", "tau1", "sigma1"),  # p->C->D
        ("tau2", "ED", "tau1"),  # C->E->D
        ("CF", "tau3", "tau2"),  # C->F->E
        ("tau3", "eta1", "eta3"),  # E->F->q
        ("FG", "eta2", "eta1"),  # F->G->q
        ("eta3", "eta2", "GE"),  # E->q->G
    ]
    return Triangulation(vertices, edges, triangles)


def running_curves():
    g1 = ("tau1", "tau2", "tau3")
    return {
        # the arc p->q crossing tau1,tau2,tau3 and its three tagged variants
        "gamma1": TaggedCurve(ARC, g1, start="p", end="q"),
        "gamma1_p": TaggedCurve(ARC, g1, start="p", end="q", tag_start=NOTCHED),
        "gamma1_q": TaggedCurve(ARC, g1, start="p", end="q", tag_end=NOTCHED),
        "gamma1_pq": TaggedCurve(
            ARC, g1, start="p", end="q", tag_start=NOTCHED, tag_end=NOTCHED
        ),
        # the closed curve encircling both punctures
        "gamma2": TaggedCurve(
            CLOSED,
            (
                "tau2", "tau3", "eta3", "eta2", "eta1", "tau3",
                "tau2", "tau1", "sigma4", "sigma3", "sigma2", "sigma1", "tau1",
            ),
            basepoint=4,
        ),
        # assorted plain arcs
        "a_AC": TaggedCurve(ARC, ("sigma3",), start="A", end="C"),
        "a_FD": TaggedCurve(ARC, ("tau2", "tau1"), start="F", end="D"),
        "a_CG": TaggedCurve(ARC, ("tau3", "eta3"), start="C", end="G"),
        "a_BE": TaggedCurve(ARC, ("sigma4", "tau1"), start="B", end="E"),
        "a_pE": TaggedCurve(ARC, ("tau1",), start="p", end="E"),
        "a_pF": TaggedCurve(ARC, ("tau1", "tau2"), start="p", end="F"),
        "a_qC": TaggedCurve(ARC, ("tau3",), start="q", end="C"),
        "a_qD": TaggedCurve(ARC, ("tau3", "tau2", "tau1"), start="q", end="D"),
        "a_pG": TaggedCurve(ARC, ("tau1", "tau2", "tau3", "eta1"), start="p", end="G"),
        # a second arc p->q, entering q from the far side
        "a_pq2": TaggedCurve(
            ARC, ("tau1", "tau2", "tau3", "eta1", "eta2"), start="p", end="q"
        ),
        # notched variants of puncture-based arcs
        "a_pE_notch": TaggedCurve(ARC, ("tau1",), start="p", end="E", tag_start=NOTCHED),
        "a_pF_notch": TaggedCurve(
            ARC, ("tau1", "tau2"), start="p", end="F", tag_start=NOTCHED
        ),
        "a_qC_notch": TaggedCurve(ARC, ("tau3",), start="q", end="C", tag_start=NOTCHED),
        # arcs of the triangulation itself (used by skein/decorated-poset cases)
        "t_tau2": TaggedCurve(ARC, (), start="C", end="E", edge="tau2"),
        "t_sigma1_p": TaggedCurve(
            ARC, (), start="p", end="D", tag_start=NOTCHED, edge="sigma1"
        ),
    }


def once_punctured_square():
    """Square A,B,C,D (counterclockwise) with one interior puncture p and the
    four spokes rA..rD."""
    vertices = {
        "p": PUNCTURE,
        "A": BOUNDARY_POINT,
        "B": BOUNDARY_POINT,
        "C": BOUNDARY_POINT,
        "D": BOUNDARY_POINT,
    }
    edges = {
        "rA": (INTERIOR, ("p", "A")),
        "rB": (INTERIOR, ("p", "B")),
        "rC": (INTERIOR, ("p", "C")),
        "rD": (INTERIOR, ("p", "D")),
        "AB": (BOUNDARY, ("A", "B")),
        "BC": (BOUNDARY, ("B", "C")),
        "CD": (BOUNDARY, ("C", "D")),
        "DA": (BOUNDARY, ("D", "A")),
    }
    triangles = [
        ("AB", "rB", "rA"),  # A->B->p
        ("BC", "rC", "rB"),  # B->C->p
        ("CD", "rD", "rC"),  # C->D->p
        ("DA", "rA", "rD"),  # D->A->p
    ]
    return Triangulation(vertices, edges, triangles)


def square_curves():
    return {
        "s_AC": TaggedCurve(ARC, ("rB",), start="A", end="C"),
        "s_CA": TaggedCurve(ARC, ("rD",), start="C", end="A"),
        "s_BD": TaggedCurve(ARC, ("rC",), start="B", end="D"),
        "s_DC_wind": TaggedCurve(ARC, ("rA", "rB", "rC"), start="D", end="C"),
        "s_pA2": TaggedCurve(ARC, ("rB", "rC", "rD"), start="A", end="p"),
        # loop based at A around p (the monogon l_p of the spoke rA)
        "s_loopA": TaggedCurve(ARC, ("rB", "rC", "rD"), start="A", end="A"),
        "s_rA_notch": TaggedCurve(ARC, (), start="p", end="A", tag_start=NOTCHED, edge="rA"),
    }


def twice_punctured_disc():
    """Disc with punctures p, q and boundary marked points M, N; five arcs:
    a1=Mp, a2=pq, a3=qN, a4=Mq (passing below p), a5=pN (passing above q).
    No self-folded triangle and no digon."""
    vertices = {
        "p": PUNCTURE,
        "q": PUNCTURE,
        "M": BOUNDARY_POINT,
        "N": BOUNDARY_POINT,
    }
    edges = {
        "a1": (INTERIOR, ("M", "p")),
        "a2": (INTERIOR, ("p", "q")),
        "a3": (INTERIOR, ("q", "N")),
        "a4": (INTERIOR, ("M", "q")),
        "a5": (INTERIOR, ("p", "N")),
        "b_top": (BOUNDARY, ("M", "N")),
        "b_bot": (BOUNDARY, ("N", "M")),
    }
    triangles = [
        ("a4", "a2", "a1"),  # M->q->p
        ("b_bot", "a3", "a4"),  # M->N->q
        ("a2", "a3", "a5"),  # p->q->N
        ("a1", "a5", "b_top"),  # M->p->N
    ]
    return Triangulation(vertices, edges, triangles)


def disc_curves():
    wind = ("a4", "a3", "a5", "a1")  # p->q winding once, no self-intersection
    wind2 = wind * 2  # the twice-winding arc p->q
    return {
        "d_MN": TaggedCurve(ARC, ("a2",), start="M", end="N"),
        "d_MN2": TaggedCurve(ARC, ("a2", "a3"), start="M", end="N"),
        "d_pq_wind": TaggedCurve(ARC, wind, start="p", end="q"),
        "d_pq_wind_p": TaggedCurve(ARC, wind, start="p", end="q", tag_start=NOTCHED),
        "d_pq_wind_q": TaggedCurve(ARC, wind, start="p", end="q", tag_end=NOTCHED),
        "d_pq_wind_pq": TaggedCurve(
            ARC, wind, start="p", end="q", tag_start=NOTCHED, tag_end=NOTCHED
        ),
        "d_pq_wind2": TaggedCurve(ARC, wind2, start="p", end="q"),
        "d_pq_wind2_p": TaggedCurve(ARC, wind2, start="p", end="q", tag_start=NOTCHED),
        "d_pq_wind2_q": TaggedCurve(ARC, wind2, start="p", end="q", tag_end=NOTCHED),
        "d_pq_wind2_pq": TaggedCurve(
            ARC, wind2, start="p", end="q", tag_start=NOTCHED, tag_end=NOTCHED
        ),
        "d_loop": TaggedCurve(CLOSED, ("a1", "a4", "a3", "a5"), basepoint=3),
        "t_a2": TaggedCurve(ARC, (), start="p", end="q", edge="a2"),
    }


def punctured_annulus():
    """Annulus with one puncture p and one marked point on each boundary
    circle (O outside, I inside).  In the universal cover, O sits at x=0,4,..,
    I at x=2,6,.., p between them; c5 is the O-I arc on the left edge of the
    fundamental domain, c1/c2 join p to the two O lifts, c3/c4 to the two I
    lifts."""
    vertices = {
        "p": PUNCTURE,
        "O": BOUNDARY_POINT,
        "I": BOUNDARY_POINT,
    }
    edges = {
        "c1": (INTERIOR, ("O", "p")),
        "c2": (INTERIOR, ("O", "p")),
        "c3": (INTERIOR, ("p", "I")),
        "c4": (INTERIOR, ("p", "I")),
        "c5": (INTERIOR, ("O", "I")),
        "b_out": (BOUNDARY, ("O", "O")),
        "b_in": (BOUNDARY, ("I", "I")),
    }
    triangles = [
        ("c1", "c2", "b_out"),  # O(0)->p->O(4)
        ("b_in", "c4", "c3"),  # I(2)->I(6)->p
        ("c5", "c3", "c1"),  # O(0)->I(2)->p
        ("c2", "c4", "c5"),  # O(4)->p->I(6)
    ]
    return Triangulation(vertices, edges, triangles)


def annulus_curves():
    return {
        # core curves below / above the puncture
        "n_below": TaggedCurve(CLOSED, ("c4", "c5", "c3"), basepoint=1),
        "n_above": TaggedCurve(CLOSED, ("c5", "c1", "c2"), basepoint=3),
        "n_OI": TaggedCurve(ARC, ("c3", "c4"), start="O", end="I"),
        "n_pO_wind": TaggedCurve(ARC, ("c4", "c5"), start="p", end="O"),
        "n_Ip": TaggedCurve(ARC, ("c1",), start="I", end="p"),
        "t_c1_notch": TaggedCurve(ARC, (), start="O", end="p", tag_end=NOTCHED, edge="c1"),
    }


def intro_disc():
    """Disc with twelve boundary marked points A..H, J..M and one puncture I,
    triangulated by the twelve interior arcs tau1..tau12 (tau3, tau4, tau10,
    tau11, tau12 are the spokes at I).  This is the surface of the opening
    crossing-resolution example."""
    vertices = {"I": PUNCTURE}
    for v in "ABCDEFGHJKLM":
        vertices[v] = BOUNDARY_POINT
    edges = {
        "tau1": (INTERIOR, ("J", "L")),
        "tau2": (INTERIOR, ("H", "J")),
        "tau3": (INTERIOR, ("H", "I")),
        "tau4": (INTERIOR, ("I", "G")),
        "tau5": (INTERIOR, ("F", "G")),
        "tau6": (INTERIOR, ("F", "D")),
        "tau7": (INTERIOR, ("E", "D")),
        "tau8": (INTERIOR, ("C", "D")),
        "tau9": (INTERIOR, ("D", "A")),
        "tau10": (INTERIOR, ("I", "F")),
        "tau11": (INTERIOR, ("I", "M")),
        "tau12": (INTERIOR, ("I", "J")),
        "BA": (BOUNDARY, ("B", "A")),
        "AC": (BOUNDARY, ("A", "C")),
        "CE": (BOUNDARY, ("C", "E")),
        "EF": (BOUNDARY, ("E", "F")),
        "FM": (BOUNDARY, ("F", "M")),
        "MJ": (BOUNDARY, ("M", "J")),
        "JK": (BOUNDARY, ("J", "K")),
        "KL": (BOUNDARY, ("K", "L")),
        "LH": (BOUNDARY, ("L", "H")),
        "HG": (BOUNDARY, ("H", "G")),
        "GD": (BOUNDARY, ("G", "D")),
        "DB": (BOUNDARY, ("D", "B")),
    }
    triangles = [
        ("DB", "tau9", "BA"),  # B->D->A
        ("tau9", "tau8", "AC"),  # A->D->C
        ("tau8", "tau7", "CE"),  # C->D->E
        ("tau7", "tau6", "EF"),  # E->D->F
        ("tau6", "GD", "tau5"),  # F->D->G
        ("tau5", "tau4", "tau10"),  # F->G->I
        ("tau4", "HG", "tau3"),  # I->G->H
        ("tau2", "tau12", "tau3"),  # H->J->I
        ("LH", "tau1", "tau2"),  # H->L->J
        ("tau1", "KL", "JK"),  # J->L->K
        ("tau12", "MJ", "tau11"),  # I->J->M
        ("tau11", "FM", "tau10"),  # I->M->F
    ]
    return Triangulation(vertices, edges, triangles)


def intro_curves():
    g1 = ("tau1", "tau2", "tau3", "tau4", "tau5", "tau6", "tau7")
    g2 = ("tau5", "tau6", "tau7", "tau8")
    return {
        "gamma1": TaggedCurve(ARC, g1, start="K", end="C"),
        "gamma2": TaggedCurve(ARC, g2, start="I", end="A", tag_start=NOTCHED),
        "gamma2_plain": TaggedCurve(ARC, g2, start="I", end="A"),
    }


def corpus():
    """List of (name, triangulation, {curve name: curve})."""
    return [
        ("running", running_example(), running_curves()),
        ("square", once_punctured_square(), square_curves()),
        ("disc2", twice_punctured_disc(), disc_curves()),
        ("annulus", punctured_annulus(), annulus_curves()),
        ("intro", intro_disc(), intro_curves()),
    ]
