"""Exception types shared across the workbench.

Every validation error names the offending indices so a failing table can
be debugged without re-running the search.
"""


class WorkbenchError(Exception):
    """Base class for all finwald errors."""


# ---------------------------------------------------------------------------
# fincat


class IllTypedComposite(WorkbenchError):
    def __init__(self, g, f, msg=""):
        self.g, self.f = g, f
        super().__init__(f"composite entry for (g={g}, f={f}) is ill-typed{': ' + msg if msg else ''}")


class NonAssociative(WorkbenchError):
    def __init__(self, g, f, e):
        self.g, self.f, self.e = g, f, e
        super().__init__(f"associativity fails on triple (g={g}, f={f}, e={e})")


class MissingIdentity(WorkbenchError):
    def __init__(self, obj, mor=None):
        self.obj, self.mor = obj, mor
        detail = f" against morphism {mor}" if mor is not None else ""
        super().__init__(f"identity of object {obj} is not a two-sided unit{detail}")


class NotComposable(WorkbenchError):
    def __init__(self, g, f):
        self.g, self.f = g, f
        super().__init__(f"morphisms (g={g}, f={f}) are not composable: tgt(f) != src(g)")


class NonUniqueMediator(WorkbenchError):
    def __init__(self, span, cocone):
        self.span, self.cocone = span, cocone
        super().__init__(f"candidate pushout for span {span} admits several mediators to cocone {cocone}")


class EnumerationLimitExceeded(WorkbenchError):
    def __init__(self, what, count, limit):
        self.what, self.count, self.limit = what, count, limit
        super().__init__(f"enumeration of {what} needs {count} items, over the limit {limit}")


# ---------------------------------------------------------------------------
# wald


class MissingIso(WorkbenchError):
    def __init__(self, mor):
        self.mor = mor
        super().__init__(f"isomorphism {mor} is missing from the ingressive subcategory")


class NotClosedUnderComposition(WorkbenchError):
    def __init__(self, g, f):
        self.g, self.f = g, f
        super().__init__(f"ingressives not closed: composite of ({g}, {f}) falls outside")


class NoZeroObject(WorkbenchError):
    def __init__(self):
        super().__init__("category has no zero object")


class ZeroMapNotIngressive(WorkbenchError):
    def __init__(self, obj, mor):
        self.obj, self.mor = obj, mor
        super().__init__(f"the morphism zero -> {obj} (index {mor}) is not ingressive")


class MissingPushout(WorkbenchError):
    def __init__(self, span):
        self.span = span
        super().__init__(f"no pushout exists for the in-budget span {span}")


class PushoutNotIngressive(WorkbenchError):
    def __init__(self, span, mor):
        self.span, self.mor = span, mor
        super().__init__(f"pushed-forward morphism {mor} of span {span} is not ingressive")


class ZeroNotPreserved(WorkbenchError):
    def __init__(self, obj):
        self.obj = obj
        super().__init__(f"functor sends the zero object to {obj}, which is not a zero object")


class CofNotPreserved(WorkbenchError):
    def __init__(self, mor):
        self.mor = mor
        super().__init__(f"functor drops ingressive morphism {mor} out of the target ingressives")


class PushoutNotPreserved(WorkbenchError):
    def __init__(self, span):
        self.span = span
        super().__init__(f"functor fails to carry the pushout square of span {span} to a pushout square")


class GluingAxiomViolated(WorkbenchError):
    def __init__(self, cube):
        self.cube = cube
        super().__init__(f"gluing axiom fails on the cube {cube}")


class BudgetTooSmallForWedge(WorkbenchError):
    def __init__(self, obj, budget):
        self.obj, self.budget = obj, budget
        super().__init__(f"every wedge complement for object {obj} exceeds budget {budget}")


class UnknownZoo(WorkbenchError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"unknown zoo category {name!r}")


class ParamTooLarge(WorkbenchError):
    def __init__(self, msg):
        super().__init__(msg)


class PushoutOutOfBudget(WorkbenchError):
    def __init__(self, span, estimate, budget):
        self.span, self.estimate, self.budget = span, estimate, budget
        super().__init__(f"span {span} has size estimate {estimate} over budget {budget}")


# ---------------------------------------------------------------------------
# simpset


class TruncationTooLow(WorkbenchError):
    def __init__(self, needed, have):
        self.needed, self.have = needed, have
        super().__init__(f"operation needs simplices up to dimension {needed}, truncated at {have}")


class Disconnected(WorkbenchError):
    def __init__(self, components):
        self.components = components
        super().__init__(f"simplicial set is disconnected: components {components}")


class NotBisimplicial(WorkbenchError):
    def __init__(self, msg):
        super().__init__(msg)


# ---------------------------------------------------------------------------
# kzero


class RelationNotPreserved(WorkbenchError):
    def __init__(self, relation):
        self.relation = relation
        super().__init__(
            f"induced map does not carry relation {relation} into target relations "
            "(budget mismatch or invalid functor)"
        )


# ---------------------------------------------------------------------------
# cli


class CategoryFileError(WorkbenchError):
    exit_code = 2


class FileSyntaxError(CategoryFileError):
    def __init__(self, line, msg):
        self.line = line
        super().__init__(f"line {line}: {msg}")


class UnresolvedReference(CategoryFileError):
    def __init__(self, line, name):
        self.line, self.name = line, name
        super().__init__(f"line {line}: reference to undeclared name {name!r}")
