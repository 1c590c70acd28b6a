from functools import wraps
from threading import RLock
from weakref import WeakKeyDictionary


def memoize(func):
    """Memoizing decorator for methods of immutable objects

    Results are cached per instance, keyed by the positional arguments. A single lock guards each
    instance cache, so concurrent readers see either no entry or the finished one.
    """
    func_instance_cache = WeakKeyDictionary()
    lock = RLock()

    @wraps(func)
    def wrapper(self, *args):
        with lock:
            try:
                results_cache = func_instance_cache[self]

            except KeyError:
                results_cache = func_instance_cache[self] = {}

            try:
                return results_cache[args]

            except KeyError:
                pass

        result = func(self, *args)

        with lock:
            return results_cache.setdefault(args, result)

    return wrapper


class MemoProperty:

    def __init__(self, fget):
        self.fget = fget
        self.memo_dict = WeakKeyDictionary()
        self.__doc__ = fget.__doc__

    def __get__(self, instance, cls=None):
        if instance is None:
            return self

        try:
            return self.memo_dict[instance]

        except KeyError:
            self.memo_dict[instance] = result = self.fget(instance)
            return result


def memo_property(fget):
    return MemoProperty(fget)
