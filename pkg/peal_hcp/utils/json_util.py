"""Some JSON encoding and decoding utilities."""


# fmt:off

import json
import logging
from typing import Any, Optional, Union

LOGGER = logging.getLogger(__name__)


JSONType = Any


class set_converter:
    @staticmethod
    def dumps(obj):
        return sorted(obj)

    @staticmethod
    def loads(obj,name=None):
        return set(obj)


class frozenset_converter(set_converter):
    @staticmethod
    def loads(obj,name=None):
        return frozenset(obj)


class tuple_converter:
    """Tuples keep their type so vertex paths decode as tuples."""
    @staticmethod
    def dumps(obj):
        return list(obj)

    @staticmethod
    def loads(obj,name=None):
        return tuple(obj)


JSONConverters = {
    'set':set_converter,
    'frozenset':frozenset_converter,
    'tuple':tuple_converter,
}


def objToJSON(obj):
    if isinstance(obj,(dict,list,str,int,float,bool)) or obj is None:
        return obj
    name = obj.__class__.__name__
    if name in JSONConverters:
        return {'__jsonclass__':[name,JSONConverters[name].dumps(obj)]}
    LOGGER.error('name: %s, obj: %r', name, obj)
    raise TypeError('Cannot encode %s class to JSON'%name)


def _tag_tuples(obj):
    # json.dumps serializes tuples as lists before `default` is consulted
    if isinstance(obj,tuple):
        return {'__jsonclass__':['tuple',[_tag_tuples(x) for x in obj]]}
    if isinstance(obj,list):
        return [_tag_tuples(x) for x in obj]
    if isinstance(obj,dict):
        return {str(k):_tag_tuples(v) for k,v in obj.items()}
    return obj


def JSONToObj(obj):
    ret = obj
    if isinstance(obj,dict) and '__jsonclass__' in obj:
        try:
            name = obj['__jsonclass__'][0]
            if name not in JSONConverters:
                raise ValueError('class %r not found in converters'%name)
            ret = JSONConverters[name].loads(obj['__jsonclass__'][1],name=name)
        except Exception as e:
            LOGGER.warning('error making json class: %r',e,exc_info=True)
    return ret


def json_encode(value: JSONType, indent: Optional[Union[int, str]] = None) -> str:
    """JSON-encodes the given Python object, with stable key order."""
    return json.dumps(
        _tag_tuples(value),
        default=objToJSON,
        separators=(",", ":") if indent is None else (",", ": "),
        indent=indent,
        sort_keys=True,
    )


def json_decode(value: Union[str, bytes, bytearray]) -> JSONType:
    """Return Python objects for the given JSON string."""
    return json.loads(value, object_hook=JSONToObj)
