from pathlib import Path

import simplejson as json
from pydantic import BaseModel


class DataModel(BaseModel):
    """Base class for all json serializable objects

    Fields that are None are left out of the json output, so optional
    certificate fields like labels only show up when they are set.
    """

    def to_json(self, indent: int = 4) -> str:
        """Convert to json string, indent 0 gives a single line"""
        if indent != 0:
            return json.dumps(self.dict(exclude_none=True), indent=indent)
        return json.dumps(self.dict(exclude_none=True))

    @classmethod
    def from_json(cls, json_str: str) -> "DataModel":
        """Generate class from json string"""
        return cls(**json.loads(json_str))

    @classmethod
    def parse(cls, filename: str) -> "DataModel":
        return cls.from_json(Path(filename).read_text())

    def serialize(self, filepath: str, filename: str) -> str:
        """Write to file

        Args:
            filepath (str): path to the file
            filename (str): filename

        Returns:
            str: absolute filename
        """
        Path(filepath).mkdir(parents=True, exist_ok=True)
        pfilename = Path(filepath) / filename
        pfilename.write_text(self.to_json(indent=2))
        return str(pfilename.absolute())
