from .memoize import memoize, memo_property, MemoProperty
