from typing import Callable, Collection, Iterable, List

import decorator


def fresh_name(base: str, taken: Collection[str]) -> str:
    """
    Returns base, or base suffixed with the smallest counter that is not taken
    """
    if base not in taken:
        return base

    counter = 2
    while f"{base}_{counter}" in taken:
        counter += 1

    return f"{base}_{counter}"


def unique(items: Iterable) -> List:
    """Removes duplicates, keeping first-occurrence order"""
    seen = set()
    result = []
    for item in items:
        if item not in seen:
            seen.add(item)
            result.append(item)

    return result


def preprocess_args(func: Callable, variable_names: List[str]):
    """
    Applies function to variables in variable_names before launching the function
    """

    def wrapper(f, *a, **kw):
        func_code = f.__code__

        names = func_code.co_varnames
        new_a = [
            func(arg) if (name in variable_names) else arg
            for (arg, name) in zip(a, names)
        ]
        new_kw = {k: func(v) if k in variable_names else v for (k, v) in kw.items()}
        return f(*new_a, **new_kw)

    return decorator.decorator(wrapper)
