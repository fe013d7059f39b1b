# utilities module marker
