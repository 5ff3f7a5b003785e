"""Exception types shared across the package."""


class GroupError(Exception):
    """Base class for everything raised deliberately by this package."""


class CycleParseError(GroupError, ValueError):
    """Malformed cycle notation, out-of-range point, or repeated point."""


class DegreeMismatchError(GroupError):
    """Two permutations of different degrees were combined."""


class NotInGroupError(GroupError):
    """An element was required to lie in a group and does not."""


class NotNormalError(GroupError):
    """A subgroup passed where a normal subgroup is required."""


class EnumerationCapError(GroupError):
    """Element (or coset) enumeration would exceed the configured cap."""

    def __init__(self, needed, cap):
        self.needed = needed
        self.cap = cap
        super().__init__(
            "too large to enumerate: needs more than %d elements (cap=%d)" % (needed, cap)
        )


class ClassCapError(GroupError):
    """Too many conjugacy classes for the normal-subgroup lattice walk."""

    def __init__(self, count, cap):
        self.count = count
        self.cap = cap
        super().__init__("class lattice cap exceeded: %d classes (cap=%d)" % (count, cap))


class InsolubleError(GroupError):
    """Raised by operations defined only for soluble groups."""


class NotPGroupError(GroupError):
    """Raised by operations defined only for p-groups."""


class NotNilpotentError(GroupError):
    """Raised by operations defined only for nilpotent groups."""


class NotSimpleError(GroupError):
    """Raised by operations that require a nonabelian simple group."""


class TowerDefectError(GroupError):
    """Internal failure to realize a tower of the required height."""


class AtlasError(GroupError):
    """Unknown catalog name or parameters out of range."""


class SchemaError(GroupError):
    """A group-spec or results document does not match the expected schema."""
