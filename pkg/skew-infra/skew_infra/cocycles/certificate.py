import logging
from typing import List, Sequence, Tuple

from dataclasses import dataclass

from skew_infra import consts
from skew_infra.algebra import GroupElement, IntegerMatrix, invariant_factors
from skew_infra.errors import AmplificationBoundExceeded, DimensionMismatchError, ValidationError
from skew_infra.iet import RauzyLoop, TowerSystem, compose_loop, iterate_substitution
from skew_infra.skew import SkewCocycle, check_periodic_type

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AperiodicityCertificate:
    """
    Witness that f is aperiodic: after `exponent` periods every tower word starts with the same
    M + 1 letters, the letters i(1..M-1) cover the alphabet, and the phi-values they carry
    generate Z^m.
    """

    exponent: int
    M: int
    prefix_letters: Tuple[int, ...]
    generators: Tuple[GroupElement, ...]
    invariant_factors: Tuple[int, ...]
    verdict: bool
    min_height: int

    @property
    def m(self) -> int:
        return self.generators[0].m if self.generators else 0

    def to_json(self) -> dict:
        return {
            "exponent": self.exponent,
            "M": self.M,
            "prefix_letters": list(self.prefix_letters),
            "generators": [list(g.coords) for g in self.generators],
            "invariant_factors": list(self.invariant_factors),
            "verdict": self.verdict,
            "min_height": self.min_height,
        }

    @classmethod
    def from_json(cls, data: dict) -> "AperiodicityCertificate":
        missing = [name for name in consts.CERTIFICATE_FIELDS if name not in data]
        if missing:
            raise ValidationError(f"Certificate is missing fields {missing}")
        return cls(
            exponent=int(data["exponent"]),
            M=int(data["M"]),
            prefix_letters=tuple(int(x) for x in data["prefix_letters"]),
            generators=tuple(GroupElement(tuple(g)) for g in data["generators"]),
            invariant_factors=tuple(int(x) for x in data["invariant_factors"]),
            verdict=bool(data["verdict"]),
            min_height=int(data.get("min_height", 0)),
        )


def common_prefix(tower: TowerSystem, depth: int, limit: int) -> List[int]:
    """Longest common prefix (at most `limit` letters) of the depth-fold substituted words"""
    streams = [iterate_substitution(tower, j, depth) for j in range(1, tower.d + 1)]
    prefix: List[int] = []
    for letters in zip(*streams):
        if len(prefix) >= limit or any(letter != letters[0] for letter in letters):
            break
        prefix.append(letters[0])
    return prefix


def _generators(prefix_letters: Sequence[int], phi: SkewCocycle) -> Tuple[GroupElement, ...]:
    """f(p(n)) - f(p(n+1)) = phi_{i(n)}, distinct values in order of first appearance"""
    seen: List[GroupElement] = []
    for letter in prefix_letters:
        value = phi.value(letter)
        if value not in seen:
            seen.append(value)
    return tuple(seen)


def _certify(prefix_letters: Sequence[int], phi: SkewCocycle) -> Tuple[Tuple[GroupElement, ...], Tuple[int, ...], bool]:
    generators = _generators(prefix_letters, phi)
    if phi.m == 0:
        return generators, (), True
    factors = invariant_factors(IntegerMatrix([g.coords for g in generators], ncols=phi.m))
    verdict = len(factors) == phi.m and all(f == 1 for f in factors)
    return generators, factors, verdict


def amplify_for_common_prefix(
    loop: RauzyLoop, phi: SkewCocycle, cap: int = 2 ** 10, scan_limit: int = consts.COMMON_PREFIX_SCAN_LIMIT
) -> AperiodicityCertificate:
    """Double the number of periods until the towers share a covering common prefix"""
    tower = compose_loop(loop)
    if tower.d != phi.d:
        raise DimensionMismatchError(tower.d, phi.d, "alphabet size")
    if not check_periodic_type(tower.A, phi):
        raise ValidationError(f"Cocycle {phi.to_json()} is not of periodic type for loop {loop.letters!r}")

    labels = set(range(1, tower.d + 1))
    diagnostics = []
    exponent = 1
    while exponent <= cap:
        min_height = min(tower.heights(exponent))
        prefix = common_prefix(tower, exponent, min(min_height, scan_limit))
        M = len(prefix) - 1
        covering = prefix[1:M] if M >= 2 else []
        if min_height > M + 1 and set(covering) == labels:
            generators, factors, verdict = _certify(covering, phi)
            certificate = AperiodicityCertificate(
                exponent=exponent,
                M=M,
                prefix_letters=tuple(covering),
                generators=generators,
                invariant_factors=factors,
                verdict=verdict,
                min_height=min_height,
            )
            logger.info(
                "Common prefix of length %d after %d periods (min height %d): invariant factors %s, verdict %s",
                M + 1, exponent, min_height, list(factors), verdict,
            )
            return certificate
        diagnostics.append(
            {"exponent": exponent, "common_prefix": len(prefix), "min_height": min_height, "covered": sorted(set(covering))}
        )
        logger.debug("No qualifying prefix after %d periods: %s", exponent, diagnostics[-1])
        exponent *= 2
    raise AmplificationBoundExceeded(cap, {"attempts": diagnostics})


def verify_certificate(certificate: AperiodicityCertificate, loop: RauzyLoop, phi: SkewCocycle) -> bool:
    """Re-derive every witness field of the certificate from the loop and phi"""
    tower = compose_loop(loop)
    M = certificate.M
    min_height = min(tower.heights(certificate.exponent))
    if M < 2 or min_height <= M + 1:
        logger.warning("Certificate prefix length %d does not fit under min height %d", M, min_height)
        return False
    prefix = common_prefix(tower, certificate.exponent, M + 1)
    if len(prefix) < M + 1 or tuple(prefix[1:M]) != certificate.prefix_letters:
        logger.warning("Certificate prefix letters do not match the towers after %d periods", certificate.exponent)
        return False
    if set(certificate.prefix_letters) != set(range(1, tower.d + 1)):
        logger.warning("Certificate prefix letters do not cover the alphabet")
        return False
    generators, factors, verdict = _certify(certificate.prefix_letters, phi)
    if generators != certificate.generators or factors != certificate.invariant_factors:
        logger.warning("Certificate generators or invariant factors do not match phi")
        return False
    return verdict == certificate.verdict
