"""Letter-to-letter presentations of morphic images.

Given a substitution ``zeta`` on ``A`` and a nonerasing ``phi: A -> B+``,
build an alphabet ``C`` of pairs ``(a, k)`` with ``1 <= k <= |phi(a)|``,

* ``psi(a) = (a, 1) ... (a, |phi(a)|)``,
* ``tau((a, k)) = psi(zeta^n(a)[k])`` for ``k < |phi(a)|`` and
  ``tau((a, |phi(a)|)) = psi(zeta^n(a)[|phi(a)|:])``,
* ``chi((a, k)) = phi(a)[k]`` (the ``k``-th letter),

where ``n`` is the smallest power with ``|zeta^n(a)| >= |phi(a)|`` for every
letter.  Then ``tau(psi(a)) = psi(zeta^n(a))``, ``chi(psi(a)) = phi(a)``
and ``chi`` maps the fixed point of ``tau`` onto ``phi(X_zeta)``.

Slices above are 1-based in ``k``; the code translates to 0-based string
indexing at that single point.  Pair ``(a, k)`` is named ``"a.k"``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError, InputError, InvalidSubstitution
from .substitution import (Morphism, Substitution, growing_letters, image_lengths,
                           is_primitive, power, validate)
from .words import Alphabet


@dataclass(frozen=True)
class LetterToLetterPresentation:
    C: Alphabet
    psi: Morphism
    tau: Substitution
    chi: Morphism
    power_used: int


def _power_needed(s: Substitution, m: Morphism) -> int:
    letters = s.alphabet.letters
    need = [len(m.rules[a]) for a in letters]
    growing = growing_letters(s)
    cap = len(letters) * (max(need) + 1)
    for n in range(1, cap + 1):
        lengths = image_lengths(s, n)
        if all(l >= k for l, k in zip(lengths, need)):
            return n
    stuck = [s.alphabet.name(a) for a, l, k in zip(letters, image_lengths(s, cap), need)
             if l < k and a not in growing]
    raise InvalidSubstitution(
        2, f"letters {stuck} never reach the image lengths required by the morphism")


def letter_to_letter(s: Substitution, m: Morphism) -> LetterToLetterPresentation:
    """Build ``(C, psi, tau, chi)`` with ``chi(X_tau) == m(X_s)``.

    Primitivity of ``s`` is what makes ``tau`` primitive; a non-primitive
    ``s`` is still accepted when the required power exists.
    """
    validate(s)
    if m.source != s.alphabet:
        raise InputError("morphism source alphabet differs from the substitution alphabet")
    a_names = s.alphabet
    n = _power_needed(s, m)
    zn = power(s, n)

    pairs = [(a, k) for a in a_names.letters for k in range(1, len(m.rules[a]) + 1)]
    C = Alphabet(tuple(f"{a_names.name(a)}.{k}" for a, k in pairs))
    code = dict(zip(pairs, C.letters))

    psi_rules = {a: "".join(code[(a, k)] for k in range(1, len(m.rules[a]) + 1))
                 for a in a_names.letters}
    psi = Morphism(a_names, C, psi_rules)

    tau_rules = {}
    for a, k in pairs:
        img = zn.rules[a]
        last = len(m.rules[a])
        piece = img[k - 1] if k < last else img[last - 1:]
        tau_rules[code[(a, k)]] = psi(piece)
    tau = Substitution(C, tau_rules, code[(s.axiom, 1)])

    chi = Morphism(C, m.target, {code[(a, k)]: m.rules[a][k - 1] for a, k in pairs})

    for a in a_names.letters:
        if tau(psi(a)) != psi(zn.rules[a]):
            raise ConsistencyError(f"tau(psi(a)) != psi(zeta^n(a)) for {a_names.name(a)}")
        if chi(psi(a)) != m.rules[a]:
            raise ConsistencyError(f"chi(psi(a)) != phi(a) for {a_names.name(a)}")
    validate(tau)
    if is_primitive(s)[0] and not is_primitive(tau)[0]:
        raise ConsistencyError("presentation lost primitivity")
    return LetterToLetterPresentation(C, psi, tau, chi, n)
