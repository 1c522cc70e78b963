"""Recursive bijections between the word classes.

``chi`` maps the avoiding words of length n onto the unequal-adjacent
words of length n+1, shifting the semiperimeter by exactly +2.  ``psi``
maps the strictly-rising-tail words onto unequal-adjacent words of the
same length, preserving area and interior points.  Both recurse on the
first-return split w = 0 . (elevated block) . remainder.
"""

from dataclasses import dataclass, field
from typing import List, Tuple

from .errors import NotInDomain
from .words import (
    CatalanWord,
    WordClass,
    avoids,
    enumerate_words,
    stat_area,
    stat_inter,
    stat_sper,
)


@dataclass(frozen=True)
class FirstReturnDecomp:
    """w = 0 . elevated_block . remainder, with the block maximal."""

    elevated_block: Tuple[int, ...]
    remainder: Tuple[int, ...]


def decompose(w) -> FirstReturnDecomp:
    """Maximal first-return split of a nonempty word."""
    letters = w.letters if isinstance(w, CatalanWord) else tuple(w)
    if not letters:
        raise NotInDomain("cannot decompose the empty word")
    cut = 1
    while cut < len(letters) and letters[cut] >= 1:
        cut += 1
    return FirstReturnDecomp(letters[1:cut], letters[cut:])


def _lowered(block):
    return tuple(x - 1 for x in block)


def _raised(letters):
    return tuple(x + 1 for x in letters)


def _chi(letters):
    if not letters:
        return (0,)
    d = decompose(letters)
    block, rem = d.elevated_block, d.remainder
    if not rem:
        # w = 0(1+u): image is 0(1 + chi(u)); covers w = "0" via u = empty
        return (0,) + _raised(_chi(_lowered(block)))
    if not block:
        # w = 00z: append a trailing 0 to the image of 0z
        return _chi((0,) + rem[1:]) + (0,)
    # w = 0(1+u)v with both parts nonempty: drop the block's last letter
    return (0,) + _raised(_chi(_lowered(block[:-1]))) + _chi(rem)


def chi(w) -> CatalanWord:
    """Map an avoiding word to an unequal-adjacent word one letter longer."""
    word = w if isinstance(w, CatalanWord) else CatalanWord(w)
    if not avoids(word, WordClass.AVOID_GEQ_GEQ):
        raise NotInDomain(f"{word} contains a weakly decreasing triple")
    return CatalanWord(_chi(word.letters))


def _psi(letters):
    if not letters:
        return ()
    d = decompose(letters)
    block, rem = d.elevated_block, d.remainder
    if block:
        return (0,) + _raised(_psi(_lowered(block))) + _psi(rem)
    return _psi(letters[1:]) + (0,)


def psi(w) -> CatalanWord:
    """Map a strictly-rising-tail word to an unequal-adjacent word,
    preserving length, area and interior points."""
    word = w if isinstance(w, CatalanWord) else CatalanWord(w)
    if not avoids(word, WordClass.CLASS_B):
        raise NotInDomain(f"{word} is not in the strictly-rising-tail class")
    return CatalanWord(_psi(word.letters))


@dataclass
class BijectionReport:
    """Outcome of the exhaustive bijectivity check at one length."""

    length: int
    chi_domain: int = 0
    chi_codomain: int = 0
    psi_domain: int = 0
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def summary(self):
        status = "ok" if self.ok else f"{len(self.violations)} violations"
        return (
            f"n={self.length}: chi {self.chi_domain}->{self.chi_codomain}, "
            f"psi on {self.psi_domain} words: {status}"
        )


def verify_bijectivity(n: int, limit: int = 16) -> BijectionReport:
    """Exhaustively check both bijections at length n.

    chi must map the avoiding words injectively onto the unequal-adjacent
    words of length n+1 with semiperimeter shifted by +2; psi must be
    injective on the rising-tail words with length, area and interior
    points preserved and images avoiding equal adjacent letters.
    """
    report = BijectionReport(length=n)
    domain = list(enumerate_words(n, WordClass.AVOID_GEQ_GEQ, limit))
    codomain = set(enumerate_words(n + 1, WordClass.AVOID_NEQ_ADJACENT, limit + 1))
    report.chi_domain = len(domain)
    report.chi_codomain = len(codomain)

    images = set()
    for w in domain:
        img = chi(w)
        if img in images:
            report.violations.append(f"chi collision at {w} -> {img}")
        images.add(img)
        if img not in codomain:
            report.violations.append(f"chi({w}) = {img} not unequal-adjacent of length {n + 1}")
        if n >= 1 and stat_sper(img) != stat_sper(w) + 2:
            report.violations.append(
                f"chi({w}) semiperimeter {stat_sper(img)} != {stat_sper(w)} + 2"
            )
    if len(images) != len(codomain):
        report.violations.append(
            f"chi image size {len(images)} != codomain size {len(codomain)}"
        )

    b_words = list(enumerate_words(n, WordClass.CLASS_B, limit))
    report.psi_domain = len(b_words)
    psi_images = set()
    for w in b_words:
        img = psi(w)
        if img in psi_images:
            report.violations.append(f"psi collision at {w} -> {img}")
        psi_images.add(img)
        if not avoids(img, WordClass.AVOID_NEQ_ADJACENT):
            report.violations.append(f"psi({w}) = {img} has equal adjacent letters")
        if len(img) != len(w):
            report.violations.append(f"psi({w}) changed length")
        if n >= 1 and (stat_area(img) != stat_area(w) or stat_inter(img) != stat_inter(w)):
            report.violations.append(f"psi({w}) = {img} does not preserve area/interior")
    return report
