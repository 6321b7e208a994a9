from .tools import format_value_for_report, to_json_ready


class IsokamError(Exception):
    """Root of all the errors raised by isokam computations.

    Note that domain errors carry the numbers that made the computation fail
    (achieved radius, singular margin, residual...) so callers can report or
    recover from them without parsing the message.

    Parameters
    ----------

    message
      String explaining the error.

    suggestion
      Suggestion on how to fix the problem (may be empty).

    data
      A dictionary with more data which users could process.
    """

    def __init__(self, message, suggestion="", data=None):
        self.message = message
        self.suggestion = suggestion
        self.data = data or {}
        full_message = message
        if suggestion:
            full_message += " " + suggestion
        super().__init__(full_message)

    def data_as_string(self):
        """Return a comma-separated string of the data, for reports."""
        data_items = sorted(self.data.items())
        items = ["%s: %s" % (k, format_value_for_report(v)) for k, v in data_items]
        return ",".join(items)

    def to_dict(self):
        """Return a JSON-ready description of the error."""
        return {
            "error": self.__class__.__name__,
            "message": self.message,
            "suggestion": self.suggestion,
            "data": to_json_ready(self.data),
        }
