from fuzzywuzzy import process

from ..IsokamError import IsokamError


def suggest_names(query, names, cutoff=70, limit=3):
    """Names close to the query, best matches first."""
    if not names:
        return []
    search = process.extract(str(query), sorted(names))
    return [
        name
        for (name, score) in sorted(search, key=lambda e: -e[1])
        if score >= cutoff
    ][:limit]


class ConfigInvalid(IsokamError):
    """Raised when an experiment config does not match its schema.

    Parameters
    ----------

    field_path
      Dotted path of the faulty field, e.g. "parameters.n_steps".

    message
      What is wrong with the field.

    valid_names
      When a name is unknown, the list of accepted names, used to suggest the
      closest ones.

    query
      The unknown name. Defaults to the last component of the field path.
    """

    def __init__(self, field_path, message, valid_names=None, query=None):
        self.field_path = field_path
        suggestion = ""
        if valid_names is not None:
            if query is None:
                query = field_path.split(".")[-1]
            close_names = suggest_names(query, valid_names)
            if close_names:
                suggestion = "Did you mean %s?" % " or ".join(close_names)
        super().__init__(
            message="%s: %s" % (field_path, message),
            suggestion=suggestion,
            data=dict(field_path=field_path),
        )
