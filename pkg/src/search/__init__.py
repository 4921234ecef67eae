from .sieve import MultiperfectSearch, SearchHit, search_multiperfect, sieve_sigma

__all__ = ['MultiperfectSearch', 'SearchHit', 'search_multiperfect', 'sieve_sigma']
